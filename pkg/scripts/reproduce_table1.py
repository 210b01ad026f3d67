"""Reproduce the known-pairs catalog for a range of m and print a compact summary.

    python scripts/reproduce_table1.py 2 8
"""

import sys

from nihoperm.table import all_pass, anomaly_count, table_report


def main():
    lo, hi = (int(a) for a in sys.argv[1:3]) if len(sys.argv) > 2 else (2, 8)
    ok = True
    for m in range(lo, hi + 1):
        results = table_report(m)
        for r in results:
            print(r.line())
        counts = {s: sum(r.status == s for r in results) for s in ("PASS", "FAIL", "SKIPPED", "INFO")}
        print(f"-- m={m}: {counts}, anomalies={anomaly_count(results)}\n")
        ok = ok and all_pass(results)
    sys.exit(0 if ok else 1)


if __name__ == "__main__":
    main()
