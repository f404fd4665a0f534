#!/usr/bin/env python3
"""Render a small gallery of wall diagrams into an output directory.

Example:

    python scripts/wall_gallery.py --out-dir out --g 3 --k 2 --eps 1/10
"""

import argparse
import pathlib
from fractions import Fraction

from k3walls import (
    MukaiVector,
    StabilityParams,
    SurfaceParams,
    line_bundle_vector,
    wall_on_axis,
)
from k3walls.jsonio import parse_frac
from k3walls.svg import render_wall_diagram

GALLERY = [
    ("pencil_walls", MukaiVector(0, 1, 0, -1), [1, 2, 3]),
    ("deeper_degree", MukaiVector(0, 1, 0, -2), [1, 2, 3]),
    ("ranked_vector", MukaiVector(-1, 1, 0, -3), [1, 2]),
    ("projection_only", MukaiVector(1, 0, 1, 1), []),
]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="out")
    parser.add_argument("--g", type=int, default=3)
    parser.add_argument("--k", type=int, default=2)
    parser.add_argument("--eps", default="1/10")
    args = parser.parse_args()

    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    sp = StabilityParams(SurfaceParams(args.g, args.k), parse_frac(args.eps))

    for stem, v, es in GALLERY:
        walls = [wall_on_axis(sp, v, line_bundle_vector(e)) for e in es]
        svg, warnings = render_wall_diagram(sp, v, walls, (Fraction(-1), Fraction(1), Fraction(-1, 5), Fraction(1)))
        path = out_dir / f"{stem}.svg"
        path.write_text(svg)
        note = f" ({'; '.join(warnings)})" if warnings else ""
        print(f"wrote {path}: {len(walls)} walls{note}")


if __name__ == "__main__":
    main()
