"""Command line interface.

Subcommands:

* ``run <file>``: compile and run a circuit file, emit the final density.
* ``demo <name>``: run a catalog circuit on its documented default input.
* ``laws``: run the twelve law suites and print the report table.

Exit codes: 0 success, 2 parse/route diagnostics (printed to stderr),
3 numerical validation failure, 1 law-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .circuits import CATALOG
from .density import DensityMatrix, diagnostics, format_table, max_abs_diff, to_json_dict
from .laws import run_all
from .textcircuit import CircuitError, initial_density, parse_circuit, route

_TELEPORT_TOL = 1e-9


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qarrow", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="compile and run a circuit file")
    run_p.add_argument("file", help="path to a circuit description")
    run_p.add_argument("--format", choices=("text", "json"), default="text")
    run_p.add_argument("--precision", type=int, default=None,
                       help="decimals in the emitted density (text default: 4)")
    run_p.add_argument("--validate-input", action="store_true",
                       help="refuse inputs that are not unit-trace Hermitian PSD at tol 1e-6")

    demo_p = sub.add_parser("demo", help="run a catalog circuit on its default input")
    demo_p.add_argument("name", choices=sorted(CATALOG))
    demo_p.add_argument("--format", choices=("text", "json"), default="text")
    demo_p.add_argument("--precision", type=int, default=None)

    laws_p = sub.add_parser("laws", help="run the monad and arrow law suites")
    laws_p.add_argument("--seed", type=_seed, default=42)
    laws_p.add_argument("--tol", type=float, default=1e-9)

    return parser


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a decimal 64-bit unsigned integer")
    return value


def _emit_density(d: DensityMatrix, fmt: str, precision: int | None, out) -> None:
    if fmt == "json":
        print(json.dumps(to_json_dict(d, precision=precision)), file=out)
    else:
        print(format_table(d, precision=4 if precision is None else precision), file=out)


def _cmd_run(args, out, err) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc}", file=err)
        return 2
    try:
        ir = parse_circuit(text)
        routed = route(ir)
    except CircuitError as exc:
        print(f"error: {exc}", file=err)
        return 2
    rho = initial_density(ir)
    if args.validate_input:
        report = diagnostics(rho, tol=1e-6)
        if not (report.hermitian and report.psd and report.unit_trace):
            print(
                f"error: input density failed validation "
                f"(hermitian={report.hermitian} psd={report.psd} "
                f"unit_trace={report.unit_trace} max_violation={report.max_violation:.3e})",
                file=err,
            )
            return 3
    _emit_density(routed.pipeline.apply(rho), args.format, args.precision, out)
    return 0


def _cmd_demo(args, out, err) -> int:
    entry = CATALOG[args.name]
    result = entry.build().apply(entry.default_input())
    _emit_density(result, args.format, args.precision, out)
    if args.name == "teleport":
        deviation = max_abs_diff(result, entry.expected_output())
        print(f"max deviation from expected output: {deviation:.3e}", file=out)
        if deviation > _TELEPORT_TOL:
            print(f"error: teleport deviated by {deviation:.3e} (tol {_TELEPORT_TOL})", file=err)
            return 3
    return 0


def _cmd_laws(args, out, err) -> int:
    reports = run_all(seed=args.seed, tol=args.tol)
    name_w = max(len(r.name) for r in reports)
    print(f"{'law'.ljust(name_w)}  {'cases':>6}  {'max residual':>13}  result", file=out)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.name.ljust(name_w)}  {r.cases:>6}  {r.max_residual:>13.3e}  {status}", file=out)
    failures = [r for r in reports if not r.passed]
    if failures:
        for r in failures:
            print(f"error: {r.name} failed, worst case: {r.worst_case}", file=err)
        return 1
    return 0


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "run":
        return _cmd_run(args, out, err)
    if args.command == "demo":
        return _cmd_demo(args, out, err)
    return _cmd_laws(args, out, err)


def entry() -> None:
    raise SystemExit(main())
