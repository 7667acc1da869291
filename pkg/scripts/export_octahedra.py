#!/usr/bin/env python3
"""Dump the octahedral so(6) lattices (and their u(3) sections) for plotting.

Writes one CSV + JSON pair per q into the output directory; the CSV columns
(l0, l1, l2, multiplicity, shell) feed any 3-d scatter tool directly.
"""

import argparse
import json
from pathlib import Path

from octasphere.hierarchy import (energy, iso_energy_decomposition, iur_lattice,
                                  lattice_to_csv, lattice_to_obj)
from octasphere.trigpoly import frac_to_str


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qmax", type=int, default=3)
    ap.add_argument("--out", default="octahedra")
    args = ap.parse_args()
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    for q in range(args.qmax + 1):
        lat = iur_lattice("so6", (q,))
        (outdir / f"so6_q{q}.csv").write_text(lattice_to_csv(lat), encoding="utf-8")
        obj = lattice_to_obj(lat)
        obj["energy"] = frac_to_str(energy("E_q", q=q))
        obj["u3_sections"] = iso_energy_decomposition(q)
        (outdir / f"so6_q{q}.json").write_text(json.dumps(obj, indent=2) + "\n",
                                               encoding="utf-8")
        print(f"q={q}: dimension {lat.dimension}, {len(lat.points)} points, "
              f"E = {obj['energy']}")


if __name__ == "__main__":
    main()
