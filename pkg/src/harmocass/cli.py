"""``harmocass`` command line: figures, CSV/JSON export and the verify suites.

Exit codes: 0 success (all checks pass), 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import HarmocassError, IoError
from .figures import cassini_scene, oscillator_scene, projectile_scene
from .oscillator import OscillatorParams
from .projectile import ProjectileParams
from .render import Scene, render_svg, write_csv
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _Usage(f"{self.prog}: error: {message}")


class _Usage(Exception):
    pass


def _write(path: str, text: str):
    try:
        Path(path).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc


def _scene_summary(scene: Scene) -> dict:
    return {
        "title": scene.title,
        "viewport": list(scene.viewport),
        "curves": [{"curve_id": k, "style": style, "label": label, "points": len(cs)}
                   for k, (cs, style, label) in enumerate(scene.curves)],
    }


def _emit_scene(scene: Scene, args) -> int:
    if args.svg:
        _write(args.svg, render_svg(scene))
    if args.csv:
        _write(args.csv, write_csv(scene))
    summary = _scene_summary(scene)
    if args.json:
        _write(args.json, json.dumps(summary, indent=2) + "\n")
    if not (args.svg or args.csv or args.json):
        print(scene.title)
        for c in summary["curves"]:
            print(f"  {c['curve_id']:>3}  {c['style']:<9} {c['points']:>5}  {c['label']}")
    return EXIT_OK


def cmd_projectile(args) -> int:
    scene = projectile_scene(ProjectileParams(args.g, args.v0), args.angles, args.samples)
    return _emit_scene(scene, args)


def cmd_oscillator(args) -> int:
    scene = oscillator_scene(OscillatorParams(args.x0, args.v0, args.omega),
                             args.angles, args.samples)
    return _emit_scene(scene, args)


def cmd_cassini(args) -> int:
    scene = cassini_scene(OscillatorParams(args.x0, args.v0, args.omega),
                          args.angles, args.samples)
    return _emit_scene(scene, args)


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.tol)
    sys.stdout.write(report.to_text())
    if args.json:
        _write(args.json, report.to_json())
    return EXIT_OK if report.overall else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="harmocass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def outputs(p):
        p.add_argument("--angles", type=int, default=24, help="number of family members (default 24)")
        p.add_argument("--samples", type=int, default=360, help="points per curve (default 360)")
        p.add_argument("--svg", metavar="PATH")
        p.add_argument("--csv", metavar="PATH")
        p.add_argument("--json", metavar="PATH", help="scene summary as JSON")

    p = sub.add_parser("projectile", help="trajectories, safety parabola, focus circle")
    p.add_argument("--g", type=float, default=9.81)
    p.add_argument("--v0", type=float, default=10.0)
    outputs(p)
    p.set_defaults(func=cmd_projectile)

    for name, func, text in (("oscillator", cmd_oscillator, "orbits, safety ellipse, Cassini oval"),
                             ("cassini", cmd_cassini, "Cassini oval of the orbit foci")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--x0", type=float, default=1.0)
        p.add_argument("--v0", type=float, default=1.0)
        p.add_argument("--omega", type=float, default=1.0)
        outputs(p)
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run invariant suites")
    p.add_argument("--suite", default="all", metavar="NAME",
                   help=f"one of {', '.join(SUITES)}, all (default all)")
    p.add_argument("--tol", type=float, default=None, help="override residual tolerances")
    p.add_argument("--json", metavar="PATH", help="write the report as JSON")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _Usage as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except HarmocassError as exc:
        print(f"harmocass: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
