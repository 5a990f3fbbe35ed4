"""Batch analysis of corpus entries and deterministic report output.

A run is described by a RunConfig; every entry gets an InvariantReport
with the computed invariants and a dictionary of named checks.

Reports serialize to JSON or CSV.  The bytes are a pure function of the
corpus and the configuration: timings are kept on the report objects
but never emitted, randomness is seeded per entry from the run seed and
the entry name, and infinite lengths print as the string "infinite".
"""

from __future__ import annotations

import csv
import functools
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import (
    DegenerateDrawsError,
    GenericityFailureError,
    NoStabilizationError,
    StepBudgetExceededError,
)
from .corpus import entry_input
from .fields import PrimeField, QQ, is_prime
from .invariants import (
    DEFAULT_DRAWS,
    DEFAULT_MAX_T,
    DEFAULT_WINDOW,
    CheckOutcome,
    check_inequalities,
    check_samuel_bounds,
    critical_locus,
    critical_multiplicity,
    generic_combination_colengths,
    is_regular_sequence,
    milnor_exact,
    multiplicity,
    sigma_scheme,
    tjurina,
)
from .jets import JetVector, dimension_jet_test, tjurina_jet_test
from .parsing import CorpusEntry
from .standard_basis import INFINITE, colength, krull_dimension, maximal_ideal

ALL_CHECKS = ("bounds", "inequality", "jets")


@dataclass(frozen=True)
class RunConfig:
    field_char: int = 0  # 0 for the rationals, otherwise an odd prime
    max_t: int = DEFAULT_MAX_T
    window: int = DEFAULT_WINDOW
    seed: int = 0
    jobs: int = 1
    step_budget: int | None = None
    checks: tuple = ALL_CHECKS

    def __post_init__(self):
        if self.field_char != 0 and (self.field_char == 2 or not is_prime(self.field_char)):
            raise ValueError("field characteristic must be 0 or an odd prime")
        if self.window < 1:
            raise ValueError("window must be positive")
        if self.max_t < self.window + 2:
            raise ValueError("max_t must be at least window + 2")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")
        unknown = set(self.checks) - set(ALL_CHECKS)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")

    def make_field(self):
        return QQ if self.field_char == 0 else PrimeField(self.field_char)

    def field_label(self) -> str:
        return "QQ" if self.field_char == 0 else f"GF({self.field_char})"

    def entry_seed(self, name: str) -> str:
        return f"{self.seed}:{name}"


@dataclass
class InvariantReport:
    name: str
    n: int
    k: int
    icis: bool
    tau: object = None
    mu: object = None
    mu_bound: object = None
    e_crit_samuel: object = None
    e_crit_generic: object = None
    draws_agree: object = None
    checks: dict = field(default_factory=dict)
    error: str | None = None
    timings: dict = field(default_factory=dict)  # never serialized

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return "error"
        if any(c.ok is False for c in self.checks.values()):
            return "fail"
        return "ok"


def _expectation_checks(entry: CorpusEntry, report: InvariantReport) -> dict:
    expected = {
        "mu": (entry.expect_mu, report.mu),
        "tau": (entry.expect_tau, report.tau),
        "e_crit": (entry.expect_e_crit, report.e_crit_samuel),
        "icis": (entry.expect_icis, report.icis),
    }
    checks = {}
    for label, (want, got) in expected.items():
        if want is None:
            continue
        if got is None:
            checks[f"expect_{label}"] = CheckOutcome(
                ok=False, detail=f"expected {label}={_text(want)}, not computed"
            )
        else:
            checks[f"expect_{label}"] = CheckOutcome(
                ok=got == want, detail=f"expected {_text(want)}, got {_text(got)}"
            )
    return checks


def _bounds_check(ring_ideal, ctx, label, config) -> CheckOutcome:
    if colength(ring_ideal, config.step_budget) == 0:
        if krull_dimension(ring_ideal, config.step_budget) < 0:
            return CheckOutcome(ok=None, detail=f"{label} ring is zero, skipped")
    result = multiplicity(
        ring_ideal,
        maximal_ideal(ctx),
        window=config.window,
        max_t=config.max_t,
        step_budget=config.step_budget,
        ring_label=f"{label} ring / maximal ideal",
    )
    outcome = check_samuel_bounds(result.table, result.e)
    if outcome.ok:
        detail = (
            f"d={result.dimension}, e={result.e}, "
            f"{len(result.table.values)} values, stable from t={result.t_stable}"
        )
        return CheckOutcome(ok=True, detail=detail)
    bad = outcome.violations()[:3]
    return CheckOutcome(ok=False, detail=f"violations {bad}")


def _jet_checks(s, report, sigma, sigma_dim, config) -> dict:
    checks = {}
    if report.icis and report.tau is not INFINITE:
        r = report.tau
        verdict = tjurina_jet_test(JetVector.of(s, r + 2), r, config.step_budget)
        checks["jet_tjurina"] = CheckOutcome(
            ok=verdict.member,
            detail=f"T({r}) on the {r + 2}-jet: member={verdict.member}",
        )
        level = colength(sigma, config.step_budget) + 3
        verdict = dimension_jet_test(JetVector.of(s, level), 1, config.step_budget)
        checks["jet_dimension"] = CheckOutcome(
            ok=not verdict.member,
            detail=f"D(1) on the {level}-jet: member={verdict.member}, want False",
        )
    elif sigma_dim >= 1:
        verdict = dimension_jet_test(JetVector.of(s, 6), 1, config.step_budget)
        checks["jet_dimension"] = CheckOutcome(
            ok=verdict.member,
            detail=f"D(1) on the 6-jet: member={verdict.member}, want True",
        )
    return checks


def analyze_entry(entry: CorpusEntry, config: RunConfig) -> InvariantReport:
    """Compute the invariants of one entry and run the selected checks."""
    s = entry_input(entry, config.make_field())
    budget = config.step_budget
    seed = config.entry_seed(entry.name)
    report = InvariantReport(name=entry.name, n=s.n, k=s.k, icis=False)
    times = report.timings

    start = time.perf_counter()
    sigma = sigma_scheme(s, s.n)
    sigma_dim = krull_dimension(sigma, budget)
    report.icis = is_regular_sequence(s, budget) and sigma_dim <= 0
    times["icis"] = time.perf_counter() - start

    start = time.perf_counter()
    report.tau = tjurina(s, budget)
    times["tjurina"] = time.perf_counter() - start

    crit = None
    if report.icis:
        start = time.perf_counter()
        report.mu = milnor_exact(s, seed=seed, step_budget=budget)
        times["milnor"] = time.perf_counter() - start

        start = time.perf_counter()
        if s.k == 1:
            generic_values = None
            report.mu_bound = colength(critical_locus(s), budget)
        else:
            generic_values = generic_combination_colengths(
                s, seed, DEFAULT_DRAWS, budget
            )
            finite = [v for v in generic_values if v is not INFINITE]
            if not finite:
                raise DegenerateDrawsError(
                    f"all {DEFAULT_DRAWS} random combinations gave infinite colength"
                )
            report.mu_bound = min(finite)
        crit = critical_multiplicity(
            s,
            seed=seed,
            window=config.window,
            max_t=config.max_t,
            step_budget=budget,
            generic_values=generic_values,
        )
        report.e_crit_samuel = crit.e_samuel
        report.e_crit_generic = crit.e_generic
        report.draws_agree = crit.draws_agree
        times["critical"] = time.perf_counter() - start

    start = time.perf_counter()
    report.checks.update(_expectation_checks(entry, report))
    if "bounds" in config.checks:
        report.checks["bounds_fiber"] = _bounds_check(
            s.component_ideal(), s.context, "fiber", config
        )
        report.checks["bounds_critical"] = _bounds_check(
            critical_locus(s), s.context, "critical", config
        )
    if "inequality" in config.checks and report.icis:
        precomputed = {
            "mu": report.mu,
            "bound": report.mu_bound,
            "tau": report.tau,
            "crit": crit,
        }
        report.checks.update(
            check_inequalities(s, seed=seed, step_budget=budget, precomputed=precomputed)
        )
    if "jets" in config.checks:
        report.checks.update(_jet_checks(s, report, sigma, sigma_dim, config))
    times["checks"] = time.perf_counter() - start
    return report


_RESOURCE_ERRORS = (
    StepBudgetExceededError,
    NoStabilizationError,
    GenericityFailureError,
    DegenerateDrawsError,
)


def _analyze_safely(entry: CorpusEntry, config: RunConfig) -> InvariantReport:
    try:
        return analyze_entry(entry, config)
    except _RESOURCE_ERRORS as exc:
        k = len(entry.polys)
        return InvariantReport(
            name=entry.name,
            n=len(entry.var_names) - k,
            k=k,
            icis=False,
            error=f"{type(exc).__name__}: {exc}",
        )


def run_corpus(entries, config: RunConfig):
    """Analyze every entry; returns (reports, exit_code).

    Exit codes: 0 all checks pass, 1 some check failed, 2 empty corpus,
    3 a computation hit a resource or genericity limit.
    """
    entries = list(entries)
    if not entries:
        return [], 2
    if config.jobs > 1 and len(entries) > 1:
        worker = functools.partial(_analyze_safely, config=config)
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(worker, entries))
    else:
        reports = [_analyze_safely(entry, config) for entry in entries]
    if any(r.error is not None for r in reports):
        code = 3
    elif any(r.verdict == "fail" for r in reports):
        code = 1
    else:
        code = 0
    return reports, code


# serialization


def _text(value):
    # equality, not identity: reports may have crossed a process boundary
    if isinstance(value, float) and value == INFINITE:
        return "infinite"
    return value


def _report_dict(report: InvariantReport) -> dict:
    return {
        "name": report.name,
        "n": report.n,
        "k": report.k,
        "icis": report.icis,
        "tau": _text(report.tau),
        "mu": _text(report.mu),
        "mu_bound": _text(report.mu_bound),
        "e_crit_samuel": _text(report.e_crit_samuel),
        "e_crit_generic": _text(report.e_crit_generic),
        "draws_agree": report.draws_agree,
        "verdict": report.verdict,
        "error": report.error,
        "checks": {
            name: {"ok": outcome.ok, "detail": outcome.detail}
            for name, outcome in sorted(report.checks.items())
        },
    }


def emit_json(reports, config: RunConfig) -> bytes:
    payload = {
        "field": config.field_label(),
        "seed": config.seed,
        "max_t": config.max_t,
        "window": config.window,
        "step_budget": config.step_budget,
        "checks": sorted(config.checks),
        "entries": [_report_dict(r) for r in reports],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _ratio_text(report: InvariantReport) -> str:
    mu, tau = report.mu, report.tau
    if isinstance(mu, int) and isinstance(tau, int) and tau > 0:
        return str(round(mu / tau, 6))
    return ""


def emit_csv(reports) -> bytes:
    out = io.StringIO(newline="")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["name", "n", "k", "icis", "mu", "tau", "e_crit", "ratio", "verdict"])
    for r in reports:
        writer.writerow(
            [
                r.name,
                r.n,
                r.k,
                "true" if r.icis else "false",
                "" if r.mu is None else _text(r.mu),
                "" if r.tau is None else _text(r.tau),
                "" if r.e_crit_samuel is None else _text(r.e_crit_samuel),
                _ratio_text(r),
                r.verdict,
            ]
        )
    return out.getvalue().encode("utf-8")


def emit_report(reports, config: RunConfig, fmt: str = "json") -> bytes:
    if fmt == "json":
        return emit_json(reports, config)
    if fmt == "csv":
        return emit_csv(reports)
    raise ValueError(f"unknown report format {fmt!r}")


def _value_from(text):
    return INFINITE if text == "infinite" else text


def reports_from_json(data: bytes):
    """Rebuild InvariantReport objects from emitted JSON bytes."""
    payload = json.loads(data.decode("utf-8"))
    reports = []
    for raw in payload["entries"]:
        report = InvariantReport(
            name=raw["name"],
            n=raw["n"],
            k=raw["k"],
            icis=raw["icis"],
            tau=_value_from(raw["tau"]),
            mu=_value_from(raw["mu"]),
            mu_bound=_value_from(raw["mu_bound"]),
            e_crit_samuel=_value_from(raw["e_crit_samuel"]),
            e_crit_generic=_value_from(raw["e_crit_generic"]),
            draws_agree=raw["draws_agree"],
            error=raw["error"],
            checks={
                name: CheckOutcome(ok=c["ok"], detail=c["detail"])
                for name, c in raw["checks"].items()
            },
        )
        reports.append(report)
    return reports
