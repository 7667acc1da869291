#!/usr/bin/env python3
"""Print the computed u(3) structure-constant table as JSON.

The table is fitted exactly over a sector box; entries are lists of
(rational coefficient, generator) pairs and shift-0 commutators are expressed
through the diagonal generators.
"""

import argparse
import json

from octasphere.operators import structure_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--box", type=int, default=2)
    args = ap.parse_args()
    st = structure_table(box=args.box)
    out = {"box": args.box,
           "table": {k: [list(e) for e in v] for k, v in sorted(st["table"].items())},
           "unmatched": st["unmatched"]}
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
