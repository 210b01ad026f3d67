"""Regenerate src/nihoperm/data/moduli.json (degree -> modulus bitmask)."""

import json
from pathlib import Path

from nihoperm.gf2poly import lowest_weight_irreducible, to_string

OUT = Path(__file__).resolve().parents[1] / "src" / "nihoperm" / "data" / "moduli.json"


def main():
    table = {}
    for n in range(4, 33, 2):
        p = lowest_weight_irreducible(n)
        table[str(n)] = hex(p)
        print(f"{n:3d}  {hex(p):>12}  {to_string(p)}")
    OUT.write_text(json.dumps(table, indent=2) + "\n")


if __name__ == "__main__":
    main()
