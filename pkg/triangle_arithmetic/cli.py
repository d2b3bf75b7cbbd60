# Copyright (C) 2023, CERN
# This software is distributed under the terms of the MIT
# licence, copied verbatim in the file "LICENSE".
# In applying this license, CERN does not waive the privileges and immunities
# granted to it by virtue of its status as Intergovernmental Organization
# or submit itself to any jurisdiction.

"""
The ``tri`` command.

Exit status is 0 when every check passes, 1 when a check fails and 2 on
usage or script syntax errors.
"""

from __future__ import annotations

import argparse
from fractions import Fraction
import logging
import pathlib
import sys
import time
import typing

from . import errors
from .chains import eq26_placement, geom_check, placement_search
from .dissection import builtin_dissection, DissectionResult, interpret, parse_script
from .identity import (
    arith_check,
    case_classify,
    family_instance,
    format_instance,
    IdentityInstance,
    make_eq8,
    normalize_eq8,
)
from .lattice_geom import (
    eq8_layout,
    eq8_terms,
    LatticeCoord,
    ORIGIN,
    PlacedTriangle,
    SignedTriangle,
    solve_params,
)
from .render import dissection_scene, eq26_scene, layout_scene, Scene, to_svg, write_svg
from .report import Format, Report, serialize
from .ring_core import embed_real, Mode, TriangleLabel
from .sweep import sweep_arith, sweep_eq8, sweep_eq26, SweepDomain

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

# Options taking exactly one value which may start with a minus sign
# (``--target -1,-2,6``); argparse only accepts plain negative numbers there.
_SINGLE_VALUE_OPTIONS = frozenset({
    "--n", "--k", "--l", "--t", "--base", "--target", "--anchor",
})

_logger = logging.getLogger(__name__)


class UsageError(Exception):
    pass


def _join_negative_values(argv: typing.Sequence[str]) -> typing.List[str]:
    joined: typing.List[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in _SINGLE_VALUE_OPTIONS:
            value = next(tokens, None)
            if value is None:
                joined.append(token)
            else:
                joined.append(f"{token}={value}")
        else:
            joined.append(token)
    return joined


def _int_tuple(arity: int) -> typing.Callable[[str], typing.Tuple[int, ...]]:
    def parse(text: str) -> typing.Tuple[int, ...]:
        try:
            values = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected {arity} comma separated integers, got '{text}'")
        if len(values) != arity:
            raise argparse.ArgumentTypeError(f"expected {arity} comma separated integers, got '{text}'")
        return values
    return parse


def _mode(text: str) -> Mode:
    try:
        return Mode(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid mode '{text}', expected n2 or n20")


def _add_eq8_params(parser: argparse.ArgumentParser, required: bool = True) -> None:
    for name in ("n", "k", "l", "t"):
        parser.add_argument(f"--{name}", type=int, required=required)


def _add_check_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--mode", type=_mode, default=Mode.N2, help="n2 (area) or n20 (with points)")
    parser.add_argument("--sense", choices=("arith", "geom"), default="arith")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug records to stderr")
    common.add_argument("--json", action="store_true", help="Print the report as JSON")

    parser = argparse.ArgumentParser(
        prog="tri",
        description="Exact arithmetic and lattice constructions on triangle labels.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    verify = commands.add_parser("verify", help="Check an identity")
    what = verify.add_subparsers(dest="what", required=True)
    eq8 = what.add_parser("eq8", help="The seven-term addition identity", parents=[common])
    _add_eq8_params(eq8)
    _add_check_options(eq8)
    eq8.add_argument("--anchor", type=_int_tuple(2), default=(0, 0), help="Base anchor i,j")
    identity = what.add_parser("identity", help="A generated identity family", parents=[common])
    identity.add_argument("--family", required=True)
    identity.add_argument("--params", type=int, nargs="*", default=[])
    _add_check_options(identity)
    identity.add_argument(
        "--window", type=int, default=6, help="Search radius for families without a placement",
    )

    dissect = commands.add_parser("dissect", help="Replay a dissection script", parents=[common])
    source = dissect.add_mutually_exclusive_group(required=True)
    source.add_argument("script", nargs="?", help="Path to a dissection script")
    source.add_argument("--builtin", choices=("a", "b"))
    dissect.add_argument("--svg", type=pathlib.Path, help="Write the dissection figure here")

    classify = commands.add_parser(
        "classify", help="Construction case of an addition identity", parents=[common],
    )
    _add_eq8_params(classify)

    solve = commands.add_parser(
        "solve", help="Increments turning one triangle into another", parents=[common],
    )
    solve.add_argument("--base", type=_int_tuple(3), required=True, help="i,j,size")
    solve.add_argument("--target", type=_int_tuple(3), required=True, help="i,j,size")

    render = commands.add_parser("render", help="Write an SVG figure", parents=[common])
    render.add_argument("figure", choices=("eq8", "eq26", "dissection"))
    _add_eq8_params(render, required=False)
    render.add_argument("--builtin", choices=("a", "b"), default="a")
    render.add_argument("--out", type=pathlib.Path, help="Output file (default: stdout)")

    sweep = commands.add_parser("sweep", help="Run an exhaustive or random sweep", parents=[common])
    sweep.add_argument("--which", choices=("eq8-n2", "eq8-n20", "arith", "eq26"), required=True)
    sweep.add_argument("--range", type=int, dest="increment_bound", help="Bound on |n|, |k|, |l|")
    sweep.add_argument("--t-range", type=int, dest="t_bound", help="Bound on |t|")
    sweep.add_argument("--samples", type=int, default=100_000)
    sweep.add_argument("--seed", type=int, default=0)
    return parser


def _report(args: argparse.Namespace, report: Report) -> None:
    print(serialize(report, Format.JSON if args.json else Format.TEXT))


def _fraction(value: Fraction) -> typing.Union[int, str]:
    return int(value) if value.denominator == 1 else str(value)


def _piece(piece: SignedTriangle) -> typing.Dict[str, typing.Any]:
    return {
        "sign": piece.sign,
        "size": _fraction(Fraction(piece.triangle.size)),
        "anchor": [
            _fraction(Fraction(piece.triangle.anchor.i)),
            _fraction(Fraction(piece.triangle.anchor.j)),
        ],
    }


def _residual_details(residual_size: int, verdict: bool) -> typing.Dict[str, typing.Any]:
    return {"holds": verdict, "residual_simplices": residual_size}


def _geom_details(
    terms: typing.Sequence[SignedTriangle],
    target: PlacedTriangle,
    mode: Mode,
) -> typing.Tuple[bool, typing.Dict[str, typing.Any]]:
    residual = geom_check(terms, (1, target), mode)
    return residual.is_empty(), {
        "target": _piece(SignedTriangle(1, target)),
        "terms": [_piece(term) for term in terms],
        **_residual_details(len(residual), residual.is_empty()),
    }


def _arith_details(
    inst: IdentityInstance,
    mode: Mode,
) -> typing.Tuple[bool, typing.Dict[str, typing.Any]]:
    verdict = arith_check(inst, mode)
    return verdict.holds, {"holds": verdict.holds, "residual": list(verdict.residual)}


def _identity_geometry(
    inst: IdentityInstance,
    mode: Mode,
    window: int,
) -> typing.Tuple[bool, typing.Dict[str, typing.Any]]:
    family = inst.family
    if family in ("eq8", "eq3"):
        # The area-only identity is the seven-term one without its <t> term at t = 0.
        n, k, l = inst.params[:3]  # noqa: E741
        t = inst.params[3] if family == "eq8" else 0
        layout = eq8_layout(PlacedTriangle(ORIGIN, t), n, k, l)
        terms = [
            term for name, term in eq8_terms(layout) if family == "eq8" or name != "t"
        ]
        return _geom_details(terms, layout.big, mode)
    if family == "eq26":
        (size,) = inst.params
        if size < 1:
            raise UsageError("the counting placement needs n >= 1")
        placement = eq26_placement(ORIGIN, size)
        return _geom_details(placement.terms, placement.target, mode)
    if family == "eq5":
        sizes = []
        for term in inst.terms:
            label = typing.cast(TriangleLabel, term.label)
            sign = label.sign * (1 if term.coeff > 0 else -1)
            sizes.extend([(sign, label.n)] * abs(term.coeff))
        target = PlacedTriangle(ORIGIN, inst.lhs.n)
        try:
            found = placement_search(sizes, target, window, mode=mode)
        except errors.SearchBudgetExceeded as exc:
            return False, {"window": window, "found": None, "error": str(exc)}
        return found is not None, {
            "window": window,
            "found": None if found is None else [_piece(piece) for piece in found],
        }
    raise UsageError(f"family '{family}' has no canonical placement; use --sense arith")


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.what == "eq8":
        inst = make_eq8(args.n, args.k, args.l, args.t)
        command = "verify eq8"
    else:
        try:
            inst = family_instance(args.family, args.params)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        command = f"verify identity {args.family}"

    if args.sense == "arith":
        passed, details = _arith_details(inst, args.mode)
    elif args.what == "eq8":
        base = PlacedTriangle(LatticeCoord(*args.anchor), args.t)
        layout = eq8_layout(base, args.n, args.k, args.l)
        passed, details = _geom_details([term for _, term in eq8_terms(layout)], layout.big, args.mode)
    else:
        passed, details = _identity_geometry(inst, args.mode, args.window)

    details.update({
        "identity": format_instance(inst),
        "params": list(inst.params),
        "mode": args.mode.value,
        "sense": args.sense,
    })
    _report(args, Report(command, passed, details, time.perf_counter() - started))
    return EXIT_PASS if passed else EXIT_FAIL


def _dissection_details(result: DissectionResult) -> typing.Dict[str, typing.Any]:
    return {
        "piece_count": result.piece_count,
        "signed_sizes": list(result.signed_sizes),
        "sum_of_squares": result.sum_of_squares,
        "pieces": [
            {"ref": str(ref), **_piece(piece)}
            for ref, piece in sorted(result.pieces, key=lambda item: item[1].triangle)
        ],
        "cancellations": [
            {"tag": cancellation.tag, **_piece(SignedTriangle(1, cancellation.triangle))}
            for cancellation in result.cancellations
        ],
    }


def cmd_dissect(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.builtin is not None:
        script = builtin_dissection(args.builtin)
        command = f"dissect --builtin {args.builtin}"
    else:
        path = pathlib.Path(args.script)
        if not path.is_file():
            raise UsageError(f"script not found: {path}")
        script = parse_script(path.read_text(encoding="utf-8"))
        command = f"dissect {path}"

    try:
        result = interpret(script, verify=True)
    except (
        errors.ResidualNotEmptyError,
        errors.CancellationMismatchError,
        errors.UnknownPieceError,
    ) as exc:
        _report(args, Report(command, False, {"error": str(exc)}, time.perf_counter() - started))
        return EXIT_FAIL

    perfect = result.report
    assert perfect is not None
    details = _dissection_details(result)
    details.update({
        "exact_tiling": perfect.exact_tiling,
        "all_positive": perfect.all_positive,
        "repeated_sizes": list(perfect.repeated_sizes),
        "target_square": perfect.target_square,
        "failures": perfect.failures(),
    })
    if args.svg is not None:
        write_svg(dissection_scene(result), args.svg)
        details["svg"] = str(args.svg)
    _report(args, Report(command, perfect.passed, details, time.perf_counter() - started))
    return EXIT_PASS if perfect.passed else EXIT_FAIL


def cmd_classify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    normalized, negated = normalize_eq8(args.n, args.k, args.l, args.t)
    case = case_classify(*normalized.params)
    details = {
        "params": [args.n, args.k, args.l, args.t],
        "normalized_params": list(normalized.params),
        "negated": sorted(negated),
        "case": case.case_number,
        "canonical_case": case.canonical_case,
        "slot_order": list(case.slot_order),
    }
    _report(args, Report("classify", True, details, time.perf_counter() - started))
    return EXIT_PASS


def cmd_solve(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    bi, bj, bsize = args.base
    ti, tj, tsize = args.target
    base = PlacedTriangle(LatticeCoord(bi, bj), bsize)
    target = PlacedTriangle(LatticeCoord(ti, tj), tsize)
    n, k, l = solve_params(base, target)  # noqa: E741
    details = {
        "base": _piece(SignedTriangle(1, base)),
        "target": _piece(SignedTriangle(1, target)),
        "params": [_fraction(n), _fraction(k), _fraction(l)],
        # Formal (r**2, r) of each increment; rational ones have no lattice chain.
        "params_embedded": [
            [_fraction(square), _fraction(value)]
            for square, value in (embed_real(Fraction(param)) for param in (n, k, l))
        ],
    }
    _report(args, Report("solve", True, details, time.perf_counter() - started))
    return EXIT_PASS


def cmd_render(args: argparse.Namespace) -> int:
    scene: Scene
    if args.figure == "eq8":
        missing = [name for name in ("n", "k", "l", "t") if getattr(args, name) is None]
        if missing:
            raise UsageError(f"render eq8 needs --{', --'.join(missing)}")
        scene = layout_scene(PlacedTriangle(ORIGIN, args.t), args.n, args.k, args.l)
    elif args.figure == "eq26":
        if args.n is None or args.n < 1:
            raise UsageError("render eq26 needs --n >= 1")
        scene = eq26_scene(args.n)
    else:
        scene = dissection_scene(interpret(builtin_dissection(args.builtin)))

    if args.out is None:
        sys.stdout.write(to_svg(scene) + "\n")
    else:
        write_svg(scene, args.out)
        _report(args, Report(f"render {args.figure}", True, {"svg": str(args.out), "items": len(scene.items)}))
    return EXIT_PASS


def cmd_sweep(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    result: typing.Any
    if args.which.startswith("eq8"):
        mode = Mode.N20 if args.which == "eq8-n20" else Mode.N2
        domain = SweepDomain.for_mode(mode)
        if args.increment_bound is not None:
            domain = SweepDomain((-args.increment_bound, args.increment_bound), domain.t)
        if args.t_bound is not None:
            domain = SweepDomain(domain.increments, (-args.t_bound, args.t_bound))
        result = sweep_eq8(domain, mode)
    elif args.which == "arith":
        result = sweep_arith(args.samples, args.seed)
    else:
        result = sweep_eq26()
    report = Report(f"sweep {args.which}", result.passed, result.details(), time.perf_counter() - started)
    _report(args, report)
    return EXIT_PASS if result.passed else EXIT_FAIL


_COMMANDS: typing.Dict[str, typing.Callable[[argparse.Namespace], int]] = {
    "verify": cmd_verify,
    "dissect": cmd_dissect,
    "classify": cmd_classify,
    "solve": cmd_solve,
    "render": cmd_render,
    "sweep": cmd_sweep,
}


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    arguments = list(argv) if argv is not None else sys.argv[1:]
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(arguments))
    except SystemExit as exc:
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return _COMMANDS[args.command](args)
    except errors.ScriptSyntaxError as exc:
        print(exc.format(), file=sys.stderr)
        return EXIT_USAGE
    except UsageError as exc:
        print(f"tri: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
