"""Print #[id, w_n] next to the Dumont count it should equal.

    python scripts/reproduce_sequence.py --n-max 12
"""

import argparse
import time

from footrule import DumontKind, count_segment, genocchi_value, make_wn
from footrule.dumont import genocchi_label


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=10)
    args = ap.parse_args()

    print(f"{'n':>3} {'#[id,w_n]':>10} {'Dumont':>10} label  ok    secs")
    for n in range(1, args.n_max + 1):
        m, odd = divmod(n, 2)
        kind = DumontKind.FIRST if odd else DumontKind.SECOND
        t0 = time.perf_counter()
        seg = count_segment(make_wn(n)).count
        dum = genocchi_value(kind, 2 * m + 2, cap=max(14, 2 * m + 2))
        label = genocchi_label(kind, 2 * m + 2)
        print(f"{n:>3} {seg:>10} {dum:>10} {label:<6} {str(seg == dum):<5} {time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
