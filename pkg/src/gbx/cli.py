"""Command-line front end: compute bases, analyze planarity, export scenes.

Exit codes: 0 success (for planarity: witness found), 1 input parse error,
2 consistent system with no witness detected, 3 I/O error, 4 inconsistent
system. Results go to stdout (or files for export), diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .buchberger import GbResult, groebner_full
from .meshing import Region, ScenePhase, mesh_implicit_surface, mesh_plane, write_scene
from .planarity import LinearForm, PlanarityReport, report_from_result
from .textio import (
    EmptyInputError,
    GeneratorSet,
    ParseError,
    ZeroGeneratorError,
    parse_generators,
    print_polynomial,
)
from .trace import render_json, render_text

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NO_WITNESS = 2
EXIT_IO = 3
EXIT_INCONSISTENT = 4


@dataclass
class RunConfig:
    command: str
    input_path: Path
    trace: str = "text"
    mode: str = "faithful"
    out_dir: Path | None = None
    bounds: tuple[float, float] = (-5.0, 5.0)
    resolution: int = 64


def _parse_bounds(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("bounds must look like LO:HI, e.g. -5:5")
    try:
        lo_f, hi_f = float(lo), float(hi)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad bounds {text!r}: {exc}") from None
    if not lo_f < hi_f:
        raise argparse.ArgumentTypeError("bounds must satisfy LO < HI")
    return lo_f, hi_f


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gbx",
        description="Groebner bases step by step, planarity of surface intersections, 3D export",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", type=Path, help="generator file, one polynomial per line")
        p.add_argument("--trace", choices=("text", "json", "off"), default="text")
        p.add_argument("--mode", choices=("faithful", "optimized"), default="faithful")

    common(sub.add_parser("compute", help="print start/GB/MGB/RGB and the step trace"))
    common(sub.add_parser("planarity", help="report consistency and planarity of the intersection"))
    export = sub.add_parser("export", help="write OBJ meshes and a scene manifest")
    common(export)
    export.add_argument("--out", type=Path, required=True, help="output directory")
    export.add_argument("--bounds", type=_parse_bounds, default=(-5.0, 5.0), metavar="LO:HI")
    export.add_argument("--res", type=int, default=64, help="grid cells per axis")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=args.input,
        trace=args.trace,
        mode=args.mode,
        out_dir=getattr(args, "out", None),
        bounds=getattr(args, "bounds", (-5.0, 5.0)),
        resolution=getattr(args, "res", 64),
    )


def _load_generators(config: RunConfig) -> GeneratorSet:
    text = config.input_path.read_text(encoding="utf-8")
    return parse_generators(text)


def _print_trace(result: GbResult, config: RunConfig, out) -> None:
    if config.trace == "off":
        return
    rendered = render_text(result.trace) if config.trace == "text" else render_json(result.trace)
    print("trace:", file=out)
    if rendered:
        print(rendered, file=out)


def _section(title: str, polys, out, labels=None) -> None:
    print(f"{title}:", file=out)
    for i, poly in enumerate(polys):
        prefix = f"{labels[i]} = " if labels is not None else ""
        print(f"  {prefix}{print_polynomial(poly)}", file=out)


def cmd_compute(config: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    generators = _load_generators(config)
    result = groebner_full(generators, optimized=config.mode == "optimized")
    _section("start", generators.generators, out, labels=generators.labels)
    _section("gb", result.gb, out, labels=[f"g{i + 1}" for i in range(len(result.gb))])
    _section("mgb", result.mgb, out)
    _section("rgb", result.rgb, out)
    _print_trace(result, config, out)
    return EXIT_OK


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _print_report(report: PlanarityReport, out) -> None:
    print(f"consistent: {_yesno(report.consistent)}", file=out)
    print(f"planar intersection detected: {_yesno(report.planar_detected)}", file=out)
    if report.witness is not None:
        witness_poly = report.witness.to_polynomial()
        print(f"witness: {print_polynomial(witness_poly)}", file=out)
        scaled_poly = LinearForm(*report.witness.integer_scaled()).to_polynomial()
        if scaled_poly != witness_poly:
            print(f"witness (integer scaled): {print_polynomial(scaled_poly)}", file=out)
        print(f"witness found in: {report.witness_source.value}", file=out)
    if report.lt_exclusion is not None:
        y_out, z_out = report.lt_exclusion
        print(
            f"leading-term exclusion: y excluded: {_yesno(y_out)}, z excluded: {_yesno(z_out)}",
            file=out,
        )
    if report.consistent:
        print("linear ideal members (oracle basis):", file=out)
        if report.oracle_basis:
            for form in report.oracle_basis:
                print(f"  {print_polynomial(form.to_polynomial())}", file=out)
        else:
            print("  (none)", file=out)


def cmd_planarity(config: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    generators = _load_generators(config)
    result = groebner_full(generators, optimized=config.mode == "optimized")
    report = report_from_result(result)
    _print_report(report, out)
    _print_trace(result, config, out)
    if not report.consistent:
        return EXIT_INCONSISTENT
    return EXIT_OK if report.planar_detected else EXIT_NO_WITNESS


def cmd_export(config: RunConfig, out=None) -> int:
    out = out if out is not None else sys.stdout
    generators = _load_generators(config)
    result = groebner_full(generators, optimized=config.mode == "optimized")
    report = report_from_result(result)
    lo, hi = config.bounds
    region = Region.cube(lo, hi, config.resolution)

    rgb_meshes = [mesh_implicit_surface(p, region) for p in result.rgb]
    if report.planar_detected:
        rgb_meshes.append(mesh_plane(report.witness, region))
    else:
        reason = "inconsistent system" if not report.consistent else "no witness detected"
        print(f"warning: no intersection plane exported ({reason})", file=sys.stderr)
    phases = [
        ScenePhase("start", tuple(mesh_implicit_surface(p, region) for p in generators)),
        ScenePhase("gb", tuple(mesh_implicit_surface(p, region) for p in result.gb)),
        ScenePhase("rgb", tuple(rgb_meshes)),
    ]
    for path in write_scene(phases, config.out_dir, region):
        print(path, file=out)
    return EXIT_OK


def _normalize_argv(argv) -> list[str]:
    # join "--bounds -5:5" so argparse does not read the value as an option
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--bounds" and i + 1 < len(argv):
            out.append(f"--bounds={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_normalize_argv(argv))
    config = _config_from_args(args)
    handlers = {"compute": cmd_compute, "planarity": cmd_planarity, "export": cmd_export}
    try:
        return handlers[config.command](config)
    except (ParseError, EmptyInputError, ZeroGeneratorError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
