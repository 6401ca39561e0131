#!/usr/bin/env python3
"""Write SVG drawings of the reference realizations to a directory.

Usage: python scripts/render_gallery.py --outdir gallery/
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from circlesystems.equivalence import RealizationClass
from circlesystems.generators import (
    canonical_octahedron_realization,
    flower,
    upper_bound_family,
)
from circlesystems.svgrender import RenderOptions, render_svg


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--outdir", type=pathlib.Path, required=True)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    drawings = {}
    for kind in RealizationClass:
        drawings[f"octahedron-{kind.value.lower()}"] = (
            canonical_octahedron_realization(kind)
        )
    for c in (3, 4, 5, 6):
        drawings[f"flower-{c}"] = flower(c)[1]
    for c in (4, 6, 8):
        drawings[f"coins-{c}"] = upper_bound_family(c)[1]

    for name, real in drawings.items():
        path = args.outdir / f"{name}.svg"
        path.write_text(render_svg(real, RenderOptions()))
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
