"""Exhaustive maximal-segment search for n = 1..N.

    python scripts/search_conjecture.py --n-max 9 --jobs 8
"""

import argparse

from footrule import max_segment_search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--allow-large", action="store_true")
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        r = max_segment_search(n, allow_large=args.allow_large, jobs=args.jobs)
        argmax = ", ".join("".join(map(str, p.word)) if n < 10 else str(p) for p in r.argmax)
        print(f"n={n:<2} max={r.max_cardinality:<6} w_n in argmax={r.wn_is_argmax!s:<5} "
              f"({r.elapsed:.1f}s) argmax: {argmax}")


if __name__ == "__main__":
    main()
