"""Command-line entry point: generate, verify, project, render, report.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from contextlib import contextmanager
from typing import Sequence

from . import amplitudes as amp
from .claims import full_report, render_full_report
from .project import project_first_coordinate, to_csv, to_json
from .render import RenderStyle, render_svg
from .roots import e8_roots, h4_roots, read_jsonl, write_jsonl
from .tolerances import DEFAULT, Tolerances
from .verify import e8_report, h4_report

# Exact generation/verification by default; pictures use unit-norm roots.
DEFAULT_MODE = {"generate": "cyclotomic", "verify": "cyclotomic", "project": "surd", "render": "surd"}


@contextmanager
def _output(path: str | None):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            yield fh


def _add_common(p: argparse.ArgumentParser, formats: Sequence[str]) -> None:
    p.add_argument("--system", choices=("e8", "h4"), default="e8")
    p.add_argument("--amplitude-mode", choices=("surd", "cyclotomic"), default=None,
                   help="default: cyclotomic for e8 generate/verify, surd otherwise")
    p.add_argument("--out", "-o", default=None, help="output file (default stdout)")
    p.add_argument("--format", choices=formats, default=formats[0])
    _add_tolerances(p)


def _add_tolerances(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("tolerances")
    g.add_argument("--tol-residual", type=float, default=DEFAULT.residual)
    g.add_argument("--tol-identity", type=float, default=DEFAULT.identity)
    g.add_argument("--tol-membership", type=float, default=DEFAULT.membership)
    g.add_argument("--tol-census", type=float, default=DEFAULT.census)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triacontagonal", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    _add_common(sub.add_parser("generate", help="write roots as JSON lines"), ("json",))
    p = sub.add_parser("verify", help="run the verification suite")
    _add_common(p, ("text", "json"))
    p.add_argument("--input", "-i", default=None, help="verify roots read from a JSON-lines file ('-' for stdin)")
    _add_common(sub.add_parser("project", help="write the first-coordinate projection"), ("csv", "json"))
    p = sub.add_parser("render", help="write the projection as SVG")
    _add_common(p, ("svg",))
    p.add_argument("--canvas-size", type=int, default=RenderStyle.canvas_size)
    p.add_argument("--point-radius", type=float, default=RenderStyle.point_radius)
    p.add_argument("--margin", type=float, default=RenderStyle.margin)
    p.add_argument("--color-scheme", choices=("by-family", "by-radius", "monochrome"), default=RenderStyle.color_scheme)
    p.add_argument("--background", default=RenderStyle.background)
    p.add_argument("--guides", action="store_true", help="draw one circle per radius class")
    p = sub.add_parser("report", help="run everything and summarize each claim")
    p.add_argument("--out", "-o", default=None)
    p.add_argument("--format", choices=("text",), default="text")
    _add_tolerances(p)
    return parser


def _tolerances(args) -> Tolerances:
    return Tolerances(residual=args.tol_residual, identity=args.tol_identity,
                      membership=args.tol_membership, census=args.tol_census)


def _roots(args):
    mode = args.amplitude_mode or (DEFAULT_MODE[args.command] if args.system == "e8" else "surd")
    amps = amp.amplitudes(mode)
    return e8_roots(amps) if args.system == "e8" else h4_roots(amps)


def run(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if getattr(args, "system", None) == "h4" and args.amplitude_mode == "cyclotomic":
        parser.error("cyclotomic amplitudes are only available for --system e8")
    tol = _tolerances(args)

    if args.command == "report":
        claims = full_report(tol)
        with _output(args.out) as fh:
            fh.write(render_full_report(claims))
        return 0 if all(c.passed for c in claims) else 1

    if args.command == "verify" and args.input is not None:
        if args.input == "-":
            roots = read_jsonl(sys.stdin)
        else:
            with open(args.input, encoding="utf-8") as fh:
                roots = read_jsonl(fh)
        if not roots:
            parser.error("no roots in input")
        system = roots[0].system
    else:
        roots = _roots(args)
        system = args.system

    if args.command == "generate":
        with _output(args.out) as fh:
            write_jsonl(roots, fh)
        return 0
    if args.command == "verify":
        report = e8_report(roots, tol) if system == "e8" else h4_report(roots, tol)
        with _output(args.out) as fh:
            fh.write(report.to_json() + "\n" if args.format == "json" else report.to_text() + "\n")
        return 0 if report.passed else 1

    try:
        points = project_first_coordinate(roots, tol.membership)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.command == "project":
        with _output(args.out) as fh:
            fh.write(to_csv(points) if args.format == "csv" else to_json(points) + "\n")
        return 0
    style = RenderStyle(canvas_size=args.canvas_size, point_radius=args.point_radius, margin=args.margin,
                        color_scheme=args.color_scheme, background=args.background,
                        draw_guide_circles=args.guides)
    try:
        style.validate()
    except ValueError as exc:
        parser.error(str(exc))
    with _output(args.out) as fh:
        fh.write(render_svg(points, style))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args, parser)


if __name__ == "__main__":
    sys.exit(main())
