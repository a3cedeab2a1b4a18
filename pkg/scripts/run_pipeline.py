#!/usr/bin/env python3
"""Run the whole pipeline on a generator file and export the 3D scene.

Prints the three bases and the planarity report, then writes one OBJ file
per phase plus the scene manifest. Defaults to the bundled quadric pair.
"""

import argparse
import sys
import time
from pathlib import Path

from gbx import groebner_full, parse_generators, print_polynomial, report_from_result
from gbx.meshing import Region, ScenePhase, mesh_implicit_surface, mesh_plane, write_scene

REPO_ROOT = Path(__file__).resolve().parent.parent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "input",
        nargs="?",
        type=Path,
        default=REPO_ROOT / "data" / "quadric_pair.gens",
    )
    parser.add_argument("--out", type=Path, default=Path("out/scene"))
    parser.add_argument("--lo", type=float, default=-5.0)
    parser.add_argument("--hi", type=float, default=5.0)
    parser.add_argument("--res", type=int, default=64)
    args = parser.parse_args()

    generators = parse_generators(args.input.read_text(encoding="utf-8"))
    t0 = time.perf_counter()
    result = groebner_full(generators)
    report = report_from_result(result)
    t_basis = time.perf_counter() - t0

    for title, polys in (("start", generators.generators), ("gb", result.gb), ("rgb", result.rgb)):
        print(f"{title}: " + ", ".join(print_polynomial(p) for p in polys))
    print(f"consistent={report.consistent} planar={report.planar_detected}")
    if report.witness is not None:
        print(
            f"witness={print_polynomial(report.witness.to_polynomial())}"
            f" source={report.witness_source.value}"
        )
    print(f"basis pipeline: {t_basis:.3f}s, {len(result.trace)} trace events")

    region = Region.cube(args.lo, args.hi, args.res)
    rgb_meshes = [mesh_implicit_surface(p, region) for p in result.rgb]
    if report.planar_detected:
        rgb_meshes.append(mesh_plane(report.witness, region))
    phases = [
        ScenePhase("start", tuple(mesh_implicit_surface(p, region) for p in generators)),
        ScenePhase("gb", tuple(mesh_implicit_surface(p, region) for p in result.gb)),
        ScenePhase("rgb", tuple(rgb_meshes)),
    ]
    for path in write_scene(phases, args.out, region):
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
