"""Sweep the e-sequence iteration over every admissible a and k for a range of m
and report how often the identity branch occurs and whether all iterates check out.

    python scripts/lemma_iterates.py --m-max 6
"""

import argparse

from nihoperm.gf2n import ctx_new
from nihoperm.mobius import INF, e_sequence, verify_iterates


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-max", type=int, default=6)
    args = ap.parse_args()

    print(f"{'m':>2} {'k':>2} {'a count':>7} {'solutions':>9} {'inf entries':>11} {'failures':>8}")
    for m in range(2, args.m_max + 1):
        ctx = ctx_new(m)
        admissible = [a for a in ctx.unit_circle() if ctx.pow(a, 3) != 1]
        for k in range(1, m + 1):
            n_sol = n_inf = n_bad = 0
            for a in admissible:
                sols, bad = verify_iterates(ctx, a, k, 2 * m)
                n_sol += len(sols)
                n_bad += len(bad)
                n_inf += sum(e is INF for e in e_sequence(ctx, a, k, 2 * m).entries)
            print(f"{m:>2} {k:>2} {len(admissible):>7} {n_sol:>9} {n_inf:>11} {n_bad:>8}")


if __name__ == "__main__":
    main()
