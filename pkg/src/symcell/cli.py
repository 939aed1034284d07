"""Command line interface: ``symcell <command> ...``.

Exit codes: 0 all checks pass, 2 parse error, 3 validation error, 4 check
failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import Algebra
from .builders import FAMILIES, BuilderParams, build
from .center import central_structure, primitive_idempotents, schur_elements
from .errors import DegenerateTrace, NotSemisimple, ParseError, SymcellError, ValidationError
from .field import field_from_tag
from .fileformat import parse_algebra_file, parse_trace_file, serialize_algebra
from .linalg import Subspace
from .suites import full_report, structural_report, verification_report
from .trace import compute_dual_basis

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_CHECK = 0, 2, 3, 4


def _load(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(str(exc), path) from None
    return parse_algebra_file(text)


def _print_subspace(name: str, alg: Algebra, space: Subspace, out) -> None:
    print(f"{name}: dim {space.dim}", file=out)
    for row in space.basis:
        print(f"  {alg.format(alg.element(row))}", file=out)


def cmd_build(args, out) -> int:
    field = field_from_tag(args.field)
    blocks = [int(b) for b in args.blocks.split(",")] if args.blocks else []
    params = BuilderParams(args.family, n=args.n, field=field, delta=args.delta, blocks=blocks)
    alg, cd, tau = build(params)
    text = serialize_algebra(alg, cd, tau, description=f"{args.family} n={args.n}")
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK


def cmd_check(args, out) -> int:
    alg, cd, tau = _load(args.file)
    report = structural_report(alg, cd, tau)
    print(report.to_json() if args.format == "json" else report.to_text(), file=out)
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_dual_basis(args, out) -> int:
    alg, cd, tau = _load(args.file)
    dual = compute_dual_basis(alg, tau)
    width = max(len(l) for l in alg.labels)
    for j, label in enumerate(alg.labels):
        print(f"D[{label}]{' ' * (width - len(label))} = {alg.format(dual[j])}", file=out)
    return EXIT_OK


def cmd_center(args, out) -> int:
    alg, cd, tau = _load(args.file)
    dual = compute_dual_basis(alg, tau)
    cs = central_structure(alg, cd, dual)
    _print_subspace("center", alg, cs.center, out)
    _print_subspace("higman", alg, cs.higman, out)
    _print_subspace("cell_ideal", alg, cs.cell_ideal, out)
    _print_subspace("cell_ideal_prime", alg, cs.cell_ideal_prime, out)
    print("cell elements:", file=out)
    for lam, x in cs.x.items():
        print(f"  x[{lam}] = {alg.format(x)}", file=out)
    print("row-wise cell elements:", file=out)
    for lam, x in cs.x_prime.items():
        print(f"  x'[{lam}] = {alg.format(x)}", file=out)
    return EXIT_OK if cs.invariant_report().ok else EXIT_CHECK


def cmd_verify(args, out) -> int:
    alg, cd, tau = _load(args.file)
    tau2 = None
    if args.alt_trace:
        try:
            text = Path(args.alt_trace).read_text()
        except OSError as exc:
            raise ParseError(str(exc), args.alt_trace) from None
        tau2 = parse_trace_file(text, alg)
    report = structural_report(alg, cd, tau)
    if report.ok:
        report.extend(verification_report(alg, cd, tau, tau2))
    print(report.to_json() if args.format == "json" else report.to_text(), file=out)
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_idempotents(args, out) -> int:
    alg, cd, tau = _load(args.file)
    dual = compute_dual_basis(alg, tau)
    fmt = alg.field.format
    schur = schur_elements(alg, cd, tau, dual)
    for lam, s in schur.items():
        value = "undetermined" if s.schur is None else fmt(s.schur)
        print(f"schur[{lam}] = {value}", file=out)
    try:
        idem = primitive_idempotents(alg, cd, tau, dual)
    except NotSemisimple as exc:
        print(f"NotSemisimple: {exc}", file=out)
        return EXIT_CHECK
    for lam, e in idem.items():
        print(f"e[{lam}] = {alg.format(e)}", file=out)
    return EXIT_OK


def cmd_report(args, out) -> int:
    alg, cd, tau = _load(args.file)
    report = full_report(alg, cd, tau)
    print(report.to_json() if args.format == "json" else report.to_text(), file=out)
    return EXIT_OK if report.ok else EXIT_CHECK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symcell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit an algebra file for a built-in family")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--delta", help="loop value for temperley-lieb, e.g. 3 or 5/2")
    p.add_argument("--blocks", help="comma-separated block sizes for matrix-blocks")
    p.add_argument("--field", default="Q", help="Q or Fp:<p>")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(func=cmd_build)

    for name, func, helptext in (
        ("check", cmd_check, "associativity, involution, cellularity and trace checks"),
        ("dual-basis", cmd_dual_basis, "print the dual basis"),
        ("center", cmd_center, "center, Higman ideal, cell ideals and cell elements"),
        ("idempotents", cmd_idempotents, "Schur elements and primitive central idempotents"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("file")
        if name == "check":
            p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="run the dual-basis and cell-ideal verification suites")
    p.add_argument("file")
    p.add_argument("--alt-trace", help="file with a second trace for independence checks")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="full machine-readable report")
    p.add_argument("file")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except DegenerateTrace as exc:
        print(f"check failed: DegenerateTrace: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except ValueError as exc:
        # bad builder parameters or field tags on the command line
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except SymcellError as exc:
        print(f"check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
