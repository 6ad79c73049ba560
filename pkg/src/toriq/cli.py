"""Command-line front end.

Reports are JSON with sorted keys, printed to stdout; diagnostics go to
stderr.  Exit codes: 0 success, 1 domain error (an operation's
precondition failed), 2 malformed input.  Human-readable output is just
the JSON itself, so two runs on the same input are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .cones import affine_fiber_rank, dual_cone, fan_cone, hilbert_basis
from .errors import DomainError, ExpressionError, InputError
from .fans import Fan, load_fan
from .kring import KRingElement, in_level_image, multiply, parse_expression, reduce
from .moment import delzant_report, delzant_svg
from .quotient import quotient_report
from .solenoid import PolarComplex, ProfiniteInt, cover_map, refine, sol_exp, SolenoidPoint


def _emit(data) -> None:
    print(json.dumps(data, indent=2, sort_keys=True))


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"{what}: expected a rational like 3/4, got {text!r}") from None


def _parse_cone_arg(fan: Fan, text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "0", "-"):
        return ()
    try:
        indices = sorted({int(tok) for tok in text.split(",")})
    except ValueError:
        raise InputError(f"--cone: expected comma-separated ray indices, got {text!r}") from None
    for i in indices:
        if not 1 <= i <= fan.n_rays:
            raise InputError(f"--cone: ray index {i} out of range 1..{fan.n_rays}")
    return tuple(i - 1 for i in indices)


def cmd_analyze(args) -> int:
    fan = load_fan(args.fan)
    report = quotient_report(fan)
    report["name"] = fan.name or "fan"
    report["fiber_ranks"] = [
        {"cone": [i + 1 for i in cone], "rank": affine_fiber_rank(fan, cone)}
        for cone in fan.cones()
    ]
    if fan.complete:
        moment = delzant_report(fan)
        report["face_lattice"] = {"f_vector": moment["f_vector"], "cusps": moment["cusps"]}
    else:
        report["face_lattice"] = None
    _emit(report)
    return 0


def cmd_delzant(args) -> int:
    fan = load_fan(args.fan)
    report = delzant_report(fan)
    report["name"] = fan.name or "fan"
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(delzant_svg(fan))
        report["svg"] = args.svg
    _emit(report)
    return 0


def cmd_hilbert(args) -> int:
    fan = load_fan(args.fan)
    indices = _parse_cone_arg(fan, args.cone)
    sigma = fan_cone(fan, indices)
    dual = dual_cone(sigma)
    basis = hilbert_basis(dual)
    _emit(
        {
            "cone": [i + 1 for i in indices],
            "dual_generators": [list(v) for v in dual.generators],
            "hilbert_basis": [list(v) for v in basis.generators],
            "rank": basis.rank_r,
        }
    )
    return 0


def _parse_profinite(args) -> ProfiniteInt:
    text = args.a.strip()
    if "/" in text:
        res_text, level_text = text.split("/", 1)
        try:
            residue, level = int(res_text), int(level_text)
        except ValueError:
            raise InputError(f"--a: expected RESIDUE/LEVEL, got {text!r}") from None
        if args.level is not None and args.level != level:
            raise InputError(f"--a level {level} conflicts with --level {args.level}")
    else:
        try:
            residue = int(text)
        except ValueError:
            raise InputError(f"--a: expected an integer residue, got {text!r}") from None
        if args.level is None:
            raise InputError("--level is required when --a carries no /LEVEL part")
        level = args.level
    if level < 1:
        raise InputError(f"--a: level must be positive, got {level}")
    return ProfiniteInt(level, residue)


def cmd_solenoid(args) -> int:
    if args.action == "exp":
        a = _parse_profinite(args)
        turns = _parse_fraction(args.turns, "--turns")
        print(sol_exp(a, turns))
    elif args.action == "cover":
        if args.n < 1 or args.m < 1:
            raise InputError("--n and --m must be positive")
        z = PolarComplex(_parse_fraction(args.rho, "--rho"), _parse_fraction(args.turns, "--turns"))
        print(cover_map(args.n, args.m, z))
    else:  # refine
        if args.level is None:
            raise InputError("--level is required for refine")
        z = SolenoidPoint(
            args.level,
            PolarComplex(_parse_fraction(args.rho, "--rho"), _parse_fraction(args.turns, "--turns")),
        )
        print(refine(z, args.to, args.branch))
    return 0


def cmd_kring(args) -> int:
    if args.action == "reduce":
        print(reduce(parse_expression(args.expr[0])))
    elif args.action == "mul":
        u = reduce(parse_expression(args.expr[0]))
        v = reduce(parse_expression(args.expr[1]))
        print(multiply(u, v))
    else:  # level
        element = reduce(parse_expression(args.expr[0]))
        print("true" if in_level_image(element, args.n) else "false")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriq",
        description="Exact invariants of toric fans and their profinite completions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="charge matrix, quotient group, discriminant, symmetry")
    p.add_argument("fan", help="fan description (JSON file)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("delzant", help="face lattice of the moment polytope")
    p.add_argument("fan")
    p.add_argument("--svg", metavar="OUT", help="write a schematic SVG (rank-2 fans)")
    p.set_defaults(func=cmd_delzant)

    p = sub.add_parser("hilbert", help="Hilbert basis of the dual of a fan cone")
    p.add_argument("fan")
    p.add_argument("--cone", required=True, metavar="I,J,...",
                   help="1-based ray indices; 0 or empty for the zero cone")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("solenoid", help="exact solenoid arithmetic")
    psub = p.add_subparsers(dest="action", required=True)
    pe = psub.add_parser("exp", help="phi(a) * nu(turns) at a's level")
    pe.add_argument("--a", required=True, help="profinite integer RESIDUE/LEVEL (or residue with --level)")
    pe.add_argument("--turns", required=True, help="base angle in turns, e.g. 3/4")
    pe.add_argument("--level", type=int, help="truncation level when --a is a bare residue")
    pc = psub.add_parser("cover", help="bonding map z -> z^(m/n)")
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--m", type=int, required=True)
    pc.add_argument("--rho", required=True)
    pc.add_argument("--turns", required=True)
    pr = psub.add_parser("refine", help="root lift to a deeper level")
    pr.add_argument("--level", type=int, required=True)
    pr.add_argument("--to", type=int, required=True)
    pr.add_argument("--branch", type=int, default=0)
    pr.add_argument("--rho", required=True)
    pr.add_argument("--turns", required=True)
    p.set_defaults(func=cmd_solenoid)

    p = sub.add_parser("kring", help="normal forms in the K-ring of the solenoidal sphere")
    ksub = p.add_subparsers(dest="action", required=True)
    kr = ksub.add_parser("reduce", help="normal form of an expression")
    kr.add_argument("expr", nargs=1)
    km = ksub.add_parser("mul", help="product of two expressions, in normal form")
    km.add_argument("expr", nargs=2)
    kl = ksub.add_parser("level", help="is the element in the level-n image?")
    kl.add_argument("n", type=int)
    kl.add_argument("expr", nargs=1)
    p.set_defaults(func=cmd_kring)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ExpressionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
