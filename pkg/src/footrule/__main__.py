import sys

from footrule.cli import main

sys.exit(main())
