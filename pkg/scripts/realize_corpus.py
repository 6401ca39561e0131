#!/usr/bin/env python3
"""Run the realization pipeline over the standard corpus and print a table.

Usage: python scripts/realize_corpus.py [--tol 1e-9] [--outdir DIR]

With --outdir, the realization JSON and an SVG drawing of every corpus
graph are written next to each other.
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from circlesystems import jsonio
from circlesystems.embedding import medial
from circlesystems.generators import (
    cube,
    dodecahedron,
    icosahedron,
    octahedron,
    tetrahedron,
)
from circlesystems.isomorphism import graphs_isomorphic
from circlesystems.realization import (
    circle_count_bounds,
    extract_abstract_graph,
    realize,
    verify_realization,
)
from circlesystems.svgrender import RenderOptions, render_svg

CORPUS = [
    ("octahedron", octahedron),
    ("medial-tetrahedron", lambda: medial(tetrahedron())),
    ("medial-cube", lambda: medial(cube())),
    ("medial-octahedron", lambda: medial(octahedron())),
    ("medial-dodecahedron", lambda: medial(dodecahedron())),
    ("medial-icosahedron", lambda: medial(icosahedron())),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--tol", type=float, default=1e-9)
    parser.add_argument("--outdir", type=pathlib.Path)
    args = parser.parse_args()

    header = (
        f"{'graph':<22}{'n':>4}{'circles':>9}{'bounds':>14}"
        f"{'residual ok':>13}{'iso':>5}{'time':>9}"
    )
    print(header)
    print("-" * len(header))
    for name, maker in CORPUS:
        g = maker()
        t0 = time.monotonic()
        r = realize(g, args.tol)
        elapsed = time.monotonic() - t0
        b = circle_count_bounds(g.n)
        verified = verify_realization(r, g).passed
        iso = graphs_isomorphic(extract_abstract_graph(r), g)
        print(
            f"{name:<22}{g.n:>4}{len(r.circles):>9}"
            f"{'[%.2f, %.2f]' % (b.lower, b.upper):>14}"
            f"{str(verified):>13}{str(iso):>5}{elapsed:>8.3f}s"
        )
        if args.outdir:
            args.outdir.mkdir(parents=True, exist_ok=True)
            (args.outdir / f"{name}.json").write_text(
                jsonio.serialize_realization(r)
            )
            (args.outdir / f"{name}.svg").write_text(
                render_svg(r, RenderOptions(shade_gray=True))
            )


if __name__ == "__main__":
    main()
