"""Count permutation pairs per m and how many the known catalog explains.

    python scripts/census.py --m-max 8
"""

import argparse
import time

from nihoperm.gf2n import ctx_new
from nihoperm.search import IDENTITY_DEGENERATE, exhaustive_search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-min", type=int, default=2)
    ap.add_argument("--m-max", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    print(f"{'m':>2} {'hits':>5} {'diag':>5} {'catalog':>7} {'unclassified':>12} {'sec':>6}")
    for m in range(args.m_min, args.m_max + 1):
        t0 = time.perf_counter()
        hits = exhaustive_search(ctx_new(m), jobs=args.jobs)
        diag = sum(h.families == (IDENTITY_DEGENERATE,) for h in hits)
        known = sum(bool(h.families) for h in hits) - diag
        unknown = sum(not h.families for h in hits)
        print(f"{m:>2} {len(hits):>5} {diag:>5} {known:>7} {unknown:>12} {time.perf_counter() - t0:>6.2f}")


if __name__ == "__main__":
    main()
