"""Run, verify and compare drivers behind the command-line interface."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__, kernel
from .atoms import SYMBOLS, configuration, reference_table, relative_gap
from .basis import Exponents
from .integrals import CoulombPair, ExchangePair, core, coulomb, exchange
from .optimize import AtomResult, OptimizerOptions, minimize
from .oracle import QuadratureError, oracle_core_parts, oracle_coulomb, oracle_exchange

CSV_COLUMNS = [
    "Z",
    "symbol",
    "configuration",
    "alpha",
    "beta",
    "gamma",
    "E_calc",
    "E_paper",
    "E_bestHF",
    "E_exact",
    "gap_bestHF_pct",
    "paper_gap_bestHF_pct",
    "paper_within_1pct",
    "note",
]
PLOT_COLUMNS = ["Z", "E_calc", "E_bestHF", "E_exact"]
FORMATS = ("text", "csv", "json")
VERIFY_TOLERANCE = 1e-7
SAMPLE_RANGE = (0.2, 12.0)

ANOMALY_NOTE = "best-HF entry repeats the calculated energy"


def sig6(x) -> str:
    """Six significant figures, blank for missing values."""
    return "" if x is None else f"{x:.6g}"


def ref_str(x) -> str:
    return "" if x is None else repr(float(x))


@dataclass
class RunReport:
    results: list
    metadata: dict = field(default_factory=dict)

    def rows(self) -> list:
        """One dict per atom joining the result with the published row."""
        table = reference_table()
        out = []
        for r in self.results:
            ref = table[r.Z]
            a, b, g = (list(r.exponents.as_tuple()) + [None, None])[:3]
            paper_gap = relative_gap(ref.E_calc, ref.E_bestHF)
            out.append(
                {
                    "Z": r.Z,
                    "symbol": SYMBOLS[r.Z],
                    "configuration": configuration(r.Z).label,
                    "alpha": a,
                    "beta": b,
                    "gamma": g,
                    "E_calc": r.energy,
                    "E_paper": ref.E_calc,
                    "E_bestHF": ref.E_bestHF,
                    "E_exact": ref.E_exact,
                    "paper_alpha": ref.alpha,
                    "paper_beta": ref.beta,
                    "paper_gamma": ref.gamma,
                    "delta_paper": r.energy - ref.E_calc,
                    "delta_bestHF": r.energy - ref.E_bestHF,
                    "delta_exact": r.energy - ref.E_exact,
                    "gap_bestHF_pct": 100.0 * relative_gap(r.energy, ref.E_bestHF),
                    "paper_gap_bestHF_pct": 100.0 * paper_gap,
                    "paper_within_1pct": paper_gap <= 0.01,
                    "note": ANOMALY_NOTE if ref.best_hf_anomalous else "",
                }
            )
        return out

    @property
    def ok(self) -> bool:
        return all(r.converged for r in self.results)

    def to_dict(self, timings: bool = False) -> dict:
        results = []
        for r in self.results:
            d = asdict(r)
            d["exponents"] = asdict(r.exponents)
            d["gradient"] = list(r.gradient)
            if not timings:
                del d["wall_time"]
            results.append(d)
        return {"metadata": dict(self.metadata), "results": results, "rows": self.rows()}

    @classmethod
    def from_dict(cls, doc: dict) -> "RunReport":
        results = []
        for d in doc["results"]:
            d = dict(d)
            d["exponents"] = Exponents(**d["exponents"])
            d["gradient"] = tuple(d["gradient"])
            results.append(AtomResult(**d))
        return cls(results, dict(doc["metadata"]))


def run(zs, opts: OptimizerOptions | None = None) -> RunReport:
    """Optimize each requested atom; results are ordered by Z."""
    opts = opts or OptimizerOptions()
    zs = sorted(set(zs))
    for z in zs:
        if not 2 <= z <= 10:
            raise ValueError(f"Z={z} outside 2..10")
    results = [minimize(z, opts=opts) for z in zs]
    meta = {
        "version": __version__,
        "kernel": kernel.BACKEND,
        "seed": opts.seed,
        "energy_tolerance": opts.energy_tolerance,
        "parameter_tolerance": opts.parameter_tolerance,
        "max_evaluations": opts.max_evaluations,
        "restarts": opts.restarts,
        "p_shell": opts.p_shell,
    }
    return RunReport(results, meta)


def compare(report: RunReport, fmt: str = "text", timings: bool = False) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; use one of {FORMATS}")
    rows = report.rows()
    if fmt == "json":
        return json.dumps(report.to_dict(timings), indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in rows:
            w.writerow(_csv_row(r))
        return buf.getvalue()
    return _text_table(rows, report, timings)


def _csv_row(r: dict) -> list:
    return [
        r["Z"],
        r["symbol"],
        r["configuration"],
        sig6(r["alpha"]),
        sig6(r["beta"]),
        sig6(r["gamma"]),
        sig6(r["E_calc"]),
        ref_str(r["E_paper"]),
        ref_str(r["E_bestHF"]),
        ref_str(r["E_exact"]),
        f"{r['gap_bestHF_pct']:.3f}",
        f"{r['paper_gap_bestHF_pct']:.3f}",
        "yes" if r["paper_within_1pct"] else "no",
        r["note"],
    ]


def _text_table(rows, report: RunReport, timings: bool) -> str:
    head = (
        f"{'Z':>2} {'atom':<4} {'configuration':<20} {'alpha':>9} {'beta':>9} {'gamma':>9}"
        f" {'E':>11} {'table E':>11} {'best H-F':>11} {'exact':>11} {'gap %':>6} {'<1%':>4}"
    )
    lines = [head, "-" * len(head)]
    by_z = {r.Z: r for r in report.results}
    for r in rows:
        line = (
            f"{r['Z']:>2} {r['symbol']:<4} {r['configuration']:<20}"
            f" {sig6(r['alpha']):>9} {sig6(r['beta']):>9} {sig6(r['gamma']):>9}"
            f" {sig6(r['E_calc']):>11} {ref_str(r['E_paper']):>11}"
            f" {ref_str(r['E_bestHF']):>11} {ref_str(r['E_exact']):>11}"
            f" {r['paper_gap_bestHF_pct']:>6.3f} {'yes' if r['paper_within_1pct'] else 'no':>4}"
        )
        res = by_z[r["Z"]]
        if not res.converged:
            line += "  NOT CONVERGED"
        if timings:
            line += f"  {res.wall_time * 1e3:.1f} ms"
        if r["note"]:
            line += f"  [{r['note']}]"
        lines.append(line)
    meta = report.metadata
    lines.append("")
    lines.append(
        f"p-shell model: {meta.get('p_shell')}; seed {meta.get('seed')};"
        f" kernel {meta.get('kernel')}; gap % is |E_paper - E_bestHF| / |E_bestHF|"
    )
    return "\n".join(lines) + "\n"


def plot_data(report: RunReport) -> str:
    """CSV series ``Z, E_calc, E_bestHF, E_exact`` formatted as in :func:`compare`."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(PLOT_COLUMNS)
    for r in report.rows():
        w.writerow([r["Z"], sig6(r["E_calc"]), ref_str(r["E_bestHF"]), ref_str(r["E_exact"])])
    return buf.getvalue()


# ---------------------------------------------------------------- verify

CORE_KINDS = ("1s", "2s", "2p")


INTEGRAL_NAMES = (
    [f"{part}_{kind}" for kind in CORE_KINDS for part in ("T", "V")]
    + [p.name for p in CoulombPair]
    + [p.name for p in ExchangePair]
)


def _pair_values(exps: Exponents):
    engine, oracle = {}, {}
    for kind in CORE_KINDS:
        c = core(kind, exps, 1)
        t, v = oracle_core_parts(kind, exps, 1.0)
        engine[f"T_{kind}"], engine[f"V_{kind}"] = c.kinetic, c.potential
        oracle[f"T_{kind}"], oracle[f"V_{kind}"] = t, v
    for p in CoulombPair:
        engine[p.name], oracle[p.name] = coulomb(p, exps), oracle_coulomb(p, exps)
    for p in ExchangePair:
        engine[p.name], oracle[p.name] = exchange(p, exps), oracle_exchange(p, exps)
    return engine, oracle


@dataclass
class VerificationReport:
    samples: int
    seed: int
    tolerance: float
    max_deviation: dict  # integral name -> max relative deviation
    worst_case: dict  # integral name -> exponents tuple
    failures: list  # (sample index, message)

    @property
    def max_overall(self) -> float:
        return max(self.max_deviation.values())

    @property
    def passed(self) -> bool:
        return not self.failures and self.max_overall <= self.tolerance

    def to_text(self) -> str:
        lines = [
            f"closed form vs quadrature: {self.samples} samples, seed {self.seed},"
            f" exponents in [{SAMPLE_RANGE[0]}, {SAMPLE_RANGE[1]}]",
            f"{'integral':<14} {'max rel dev':>12}  worst at (alpha, beta, gamma)",
        ]
        for name in INTEGRAL_NAMES:
            w = ", ".join(f"{x:.6f}" for x in self.worst_case[name])
            lines.append(f"{name:<14} {self.max_deviation[name]:>12.3e}  ({w})")
        for i, msg in self.failures:
            lines.append(f"sample {i}: {msg}")
        lines.append(
            f"max deviation {self.max_overall:.3e} (tolerance {self.tolerance:.0e}):"
            f" {'PASS' if self.passed else 'FAIL'}"
        )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_deviation": self.max_deviation,
            "worst_case": {k: list(v) for k, v in self.worst_case.items()},
            "failures": [list(f) for f in self.failures],
        }


def verify(samples: int, seed: int = 42, tolerance: float = VERIFY_TOLERANCE) -> VerificationReport:
    """Differential test of every closed-form integral against the oracle."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    draws = rng.uniform(*SAMPLE_RANGE, size=(samples, 3))
    dev = {name: -1.0 for name in INTEGRAL_NAMES}
    worst = {name: (math.nan,) * 3 for name in INTEGRAL_NAMES}
    failures = []
    for i, x in enumerate(draws):
        exps = Exponents(*x)
        try:
            engine, oracle = _pair_values(exps)
        except QuadratureError as exc:
            failures.append((i, str(exc)))
            continue
        for name in INTEGRAL_NAMES:
            d = abs(engine[name] - oracle[name]) / abs(oracle[name])
            if not math.isfinite(d):
                failures.append((i, f"{name}: non-finite deviation"))
            elif d > dev[name]:
                dev[name] = d
                worst[name] = tuple(float(v) for v in x)
    return VerificationReport(samples, seed, tolerance, dev, worst, failures)
