"""Default resource caps."""

from dataclasses import dataclass
from math import factorial


@dataclass(frozen=True)
class Caps:
    enumeration: int = 12
    bitmask_dp: int = 26
    backtracking: int = 12
    dumont: int = 14
    verify_budget: int = factorial(10)
    search: int = 9
    search_override: int = 11


DEFAULT_CAPS = Caps()
