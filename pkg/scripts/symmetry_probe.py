"""Check whether #[id, u] is invariant under u -> u^-1 and under
conjugation by the reversal n..1, over all of S_n.

Results are informational; the search never relies on them.
"""

import argparse

from footrule import Permutation, compose, count_segment, inverse
from footrule.perm import all_permutations


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=7)
    args = ap.parse_args()

    for n in range(1, args.n_max + 1):
        rev = Permutation(range(n, 0, -1))
        inv_bad = conj_bad = 0
        for u in all_permutations(n):
            c = count_segment(u).count
            inv_bad += count_segment(inverse(u)).count != c
            conj_bad += count_segment(compose(rev, compose(u, rev))).count != c
        print(f"n={n}: inverse violations={inv_bad}, reversal-conjugation violations={conj_bad}")


if __name__ == "__main__":
    main()
