"""Command-line entry point: ``slaterhf {run,verify,compare,plot-data}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .atoms import DEFAULT_P_SHELL, P_SHELL_MODELS
from .optimize import OptimizerOptions
from .report import FORMATS, RunReport, compare, plot_data, run, verify

ALL_Z = list(range(2, 11))


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {v}")
    return v


def _add_run_options(p: argparse.ArgumentParser, with_from: bool = False) -> None:
    sel = p.add_mutually_exclusive_group()
    sel.add_argument("-z", "--z", type=int, choices=ALL_Z, action="append", metavar="Z",
                     help="atomic number 2..10 (repeatable); default all")
    sel.add_argument("--all", action="store_true", help="all atoms He..Ne (default)")
    if with_from:
        sel.add_argument("--from", dest="source", type=Path, metavar="JSON",
                         help="reuse a report written by 'run --format json'")
    p.add_argument("--seed", type=int, default=42, help="restart perturbation seed")
    p.add_argument("--energy-tol", type=_positive_float, default=1e-10)
    p.add_argument("--param-tol", type=_positive_float, default=1e-8)
    p.add_argument("--max-evals", type=_positive_int, default=10000)
    p.add_argument("--restarts", type=int, default=3)
    p.add_argument("--p-shell", choices=P_SHELL_MODELS, default=DEFAULT_P_SHELL,
                   help="treatment of 2p-2p repulsion (default: %(default)s)")
    p.add_argument("--timings", action="store_true", help="include wall times (not reproducible)")


def _add_output(p: argparse.ArgumentParser, default_fmt: str = "text") -> None:
    p.add_argument("--format", choices=FORMATS, default=default_fmt)
    p.add_argument("-o", "--output", type=Path, help="write to file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slaterhf",
        description="Single-determinant Slater-orbital Hartree-Fock for He..Ne",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="optimize exponents for one or all atoms")
    _add_run_options(p)
    _add_output(p)

    p = sub.add_parser("verify", help="check closed-form integrals against quadrature")
    p.add_argument("--samples", type=_positive_int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("compare", help="computed vs published energies")
    _add_run_options(p, with_from=True)
    _add_output(p)

    p = sub.add_parser("plot-data", help="write Z, E_calc, E_bestHF, E_exact as CSV")
    _add_run_options(p, with_from=True)
    p.add_argument("-o", "--output", type=Path, required=True)
    return parser


def _emit(text: str, path: Path | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        path.write_text(text)


def _report(args) -> RunReport:
    if getattr(args, "source", None) is not None:
        return RunReport.from_dict(json.loads(args.source.read_text()))
    opts = OptimizerOptions(
        energy_tolerance=args.energy_tol,
        parameter_tolerance=args.param_tol,
        max_evaluations=args.max_evals,
        restarts=args.restarts,
        seed=args.seed,
        p_shell=args.p_shell,
    )
    return run(args.z or ALL_Z, opts)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            rep = verify(args.samples, args.seed)
            text = rep.to_text() if args.format == "text" else json.dumps(rep.to_dict(), indent=2) + "\n"
            _emit(text, args.output)
            return 0 if rep.passed else 1
        report = _report(args)
        if args.command == "plot-data":
            _emit(plot_data(report), args.output)
        else:
            _emit(compare(report, args.format, args.timings), args.output)
    except (ValueError, OSError) as exc:
        parser.error(str(exc))
    return 0 if report.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
