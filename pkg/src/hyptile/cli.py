"""Command-line surface: construct tiles, render disk figures, run
verification suites.

    hyptile construct regular --n 7 --angle 2pi/3 --svg out.svg
    hyptile construct equilateral-tile --n 12 --area 6pi
    hyptile verify all --seed 42 --out report.json

Polygon JSON goes to stdout (or --out); human-readable parameter
reports go to stderr so machine consumers can pipe stdout.

Exit codes: 0 success; 1 malformed request (bad flags, unparseable
numbers, unknown suite); 2 domain error (parameters outside a
constructor's range); 3 construction failure (the request is
well-formed but no embedded polygon realizes it); 4 a verification
suite ran to completion with failing checks.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from . import verify
from .construct import (
    equilateral_even_gon,
    equilateral_tile,
    equilateral_tile_params,
    isosceles_triangle_tile,
    regular_polygon,
    rhombic_tile,
)
from .errors import (
    ClosureError,
    ConstructionError,
    DegeneracyError,
    DomainError,
    GeometryError,
)
from .polygon import from_side_angle_data, polygon_to_json
from .render import save_svg

# a*pi/b with optional decimal a and integer b: "pi", "2pi/3", "4.5pi", "-pi/2"
_PI_RE = re.compile(r"(?i)^\s*([+-]?(?:\d+\.?\d*|\.\d+)?)\s*pi\s*(?:/\s*(\d+))?\s*$")


def parse_pi_literal(text: str) -> float:
    """Parse "a*pi/b" rational-pi syntax ("2pi/3", "6pi", "4.5pi", "pi/8")
    or a plain float literal.

    The rational part is parsed exactly (Fraction) and applied in the
    same order a Python caller would write it -- a * math.pi / b -- so
    CLI angles are bit-identical to their library-literal counterparts.
    """
    m = _PI_RE.match(text)
    if m:
        a, b = m.group(1), m.group(2)
        if a in ("", "+", "-"):
            a += "1"
        try:
            num = Fraction(a)
        except ValueError:
            raise argparse.ArgumentTypeError(f"cannot parse {text!r}") from None
        val = float(num) * math.pi
        if b:
            val /= int(b)
        return val
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse {text!r}: expected a number or an a*pi/b literal"
        ) from None


def _scalar_list(text: str):
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise argparse.ArgumentTypeError("expected a comma-separated list of numbers")
    return [parse_pi_literal(t) for t in items]


class _Parser(argparse.ArgumentParser):
    """argparse, but malformed requests exit 1 (default would be 2,
    which this interface reserves for domain errors)."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="hyptile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write polygon JSON here instead of stdout")
    common.add_argument("--svg", metavar="FILE", help="also render a Poincare-disk SVG")

    con = sub.add_parser("construct", help="build a polygon and emit its JSON")
    csub = con.add_subparsers(dest="constructor", required=True)

    p = csub.add_parser("regular", parents=[common], help="regular n-gon with given interior angle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--angle", type=parse_pi_literal, required=True)

    p = csub.add_parser("iso-triangle", parents=[common], help="isosceles triangle of given area")
    p.add_argument("--area", type=parse_pi_literal, required=True)
    p.add_argument("--k", type=int, default=None, help="apex multiplicity (default: smallest admissible)")

    p = csub.add_parser("rhombus", parents=[common], help="rhombic tile of given area")
    p.add_argument("--area", type=parse_pi_literal, required=True)

    p = csub.add_parser(
        "equilateral-even", parents=[common],
        help="equilateral 2k-gon from a half-sequence of interior angles",
    )
    p.add_argument("--angles", type=_scalar_list, required=True, metavar="T1,T2,...,TK")

    p = csub.add_parser(
        "equilateral-tile", parents=[common],
        help="equilateral n-gon tile of given area (angles theta1, theta acute)",
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--area", type=parse_pi_literal, required=True)

    p = csub.add_parser("chain", parents=[common], help="close a walk of explicit sides and angles")
    p.add_argument("--sides", type=_scalar_list, required=True, metavar="L1,...,LN")
    p.add_argument("--angles", type=_scalar_list, required=True, metavar="T1,...,TN")

    v = sub.add_parser("verify", help="run a named verification suite")
    v.add_argument("suite", choices=list(verify.SUITE_NAMES))
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--out", metavar="FILE", help="write the JSON report here instead of stdout")

    return parser


def _construct(args):
    """Build the requested polygon; returns (polygon, report-or-None)."""
    c = args.constructor
    if c == "regular":
        return regular_polygon(args.n, args.angle), None
    if c == "iso-triangle":
        poly, par = isosceles_triangle_tile(args.area, args.k)
        rep = (
            f"IsoTriangleParams: k={par.k} theta1={par.theta1!r} "
            f"theta2={par.theta2!r} area={par.area!r} tri211={par.tri211()}"
        )
        return poly, rep
    if c == "rhombus":
        return rhombic_tile(args.area), None
    if c == "equilateral-even":
        return equilateral_even_gon(tuple(args.angles)), None
    if c == "equilateral-tile":
        poly = equilateral_tile(args.n, args.area)
        try:
            par = equilateral_tile_params(args.n, args.area)
            rep = (
                f"TileParams: n={par.n} area={par.area!r} sigma={par.sigma!r} "
                f"m={par.m!r} theta1={par.theta1!r} theta={par.theta!r}"
            )
        except DomainError:
            # the area-3*pi hexagon: served as the regular hexagon
            rep = "TileParams: degenerate family point; regular hexagon with angle pi/6"
        return poly, rep
    return from_side_angle_data(args.sides, args.angles), None


def _cmd_construct(args) -> int:
    poly, report = _construct(args)
    text = json.dumps(polygon_to_json(poly), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if report:
        print(report, file=sys.stderr)
    if args.svg:
        save_svg(poly, args.svg)
    return 0


def _cmd_verify(args) -> int:
    rep = verify.run_suite(args.suite, seed=args.seed)
    text = json.dumps(rep, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if not rep["passed"]:
        failed = [c["id"] for c in rep["checks"] if c["status"] != "pass"]
        print(f"FAILED checks: {', '.join(failed)}", file=sys.stderr)
        return 4
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args)
        return _cmd_construct(args)
    except DomainError as e:
        print(f"hyptile: domain error: {e}", file=sys.stderr)
        return 2
    except (ConstructionError, GeometryError, ClosureError, DegeneracyError) as e:
        print(f"hyptile: construction failed: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
