"""Inequality verdicts, randomized corpora and stable reports.

Assembles the exact invariants into the main inequality checks:
lct(m*J_f) against the polar-invariant sum, the Lelong-ratio chain, the
integral-closure domination of lct(f), and the hyperplane-restriction probe.
"""
from __future__ import annotations

import concurrent.futures
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .exactgeom import (
    InvalidInputError,
    MonomialIdeal,
)
from .germs import (
    IdealPresentation,
    NONDEGENERATE,
    NOT_ISOLATED,
    NotMonomializableError,
    Polynomial,
    check_isolated,
    jacobian_ideal,
    monomialize,
    lct_nondegenerate,
    poly,
    product_with_maximal,
)
from .invariants import (
    dh_lower_bound,
    lelong_numbers,
    lct_monomial,
    loja_monomial,
)
from .sections import (
    DegenerateRestrictionError,
    LojaEstimate,
    LojaParams,
    loja_line,
    loja_numeric,
    polar_invariant,
    restrict,
    sample_plane,
)

EXIT_OK = 0
EXIT_EXACT_FAILURE = 2
EXIT_NUMERIC_FAILURE = 3

DEFAULT_TOLERANCE = 0.05


def _num(x):
    return float(x) if not isinstance(x, Fraction) else x


@dataclass(frozen=True)
class Verdict:
    name: str
    lhs: Fraction | float
    rhs: Fraction | float
    numeric: bool
    tolerance: float | None
    strict: bool | None = None
    sources: tuple[str, ...] = ()

    @property
    def margin(self):
        if self.numeric:
            return float(self.rhs) - float(self.lhs)
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        if self.numeric:
            tol = self.tolerance if self.tolerance is not None else DEFAULT_TOLERANCE
            return float(self.margin) >= -tol * max(1.0, abs(float(self.rhs)))
        return self.margin >= 0


def _verdict(name, lhs, rhs, sources, tolerance=None, strict=None) -> Verdict:
    numeric = not (isinstance(lhs, Fraction) and isinstance(rhs, Fraction))
    return Verdict(name, lhs, rhs, numeric,
                   tolerance if numeric else None, strict, tuple(sources))


def _estimate_value(est: LojaEstimate):
    return est.rational if est.rational is not None else est.value


def verify_main(
    f: Polynomial,
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
    params: LojaParams | None = None,
    allow_nondegenerate: bool = False,
) -> tuple[Verdict, list[LojaEstimate]]:
    """Sum of 1/(1+theta(f_j)) against lct(m*J_f)."""
    if check_isolated(f) == NOT_ISOLATED:
        raise InvalidInputError("germ has non-isolated singularity")
    n = f.dim
    thetas = [polar_invariant(f, j, seed=seed, params=params) for j in range(n)]
    lhs = Fraction(0)
    exact = True
    for est in thetas:
        v = _estimate_value(est)
        if isinstance(v, Fraction):
            lhs = lhs + Fraction(1) / (1 + v)
        else:
            exact = False
            lhs = float(lhs) + 1.0 / (1.0 + v)
    mJ = product_with_maximal(jacobian_ideal(f))
    try:
        mono = monomialize(mJ)
    except NotMonomializableError:
        if not allow_nondegenerate:
            raise
        mono = monomialize(mJ, NONDEGENERATE)
    rhs = lct_monomial(mono.ideal)
    sources = ["polar_invariant:" + est.method for est in thetas]
    sources.append("lct_monomial:" + mono.mode)
    return _verdict("theorem-main", lhs, rhs, sources, tolerance), thetas


def verify_chain(
    a: MonomialIdeal,
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
    params: LojaParams | None = None,
    include_numeric: bool = False,
    max_reseeds: int = 5,
) -> list[Verdict]:
    """The Lelong-ratio chain and its termwise Lojasiewicz lower bounds."""
    n = a.dim
    lv = lelong_numbers(a)
    lct = lct_monomial(a)
    verdicts = [
        _verdict("chain-lct", dh_lower_bound(a), lct,
                 ["dh_lower_bound", "lct_monomial"]),
    ]
    gens_poly = IdealPresentation(
        n, tuple(poly(n, {v: 1}) for v in a.generators))
    for j in range(n):
        ratio = lv[n - j - 1] / lv[n - j]
        if j == 0:
            L = loja_monomial(a)
            verdicts.append(_verdict(
                "chain-term-j0", Fraction(1) / L, ratio,
                ["loja_monomial", "lelong_numbers"]))
        elif j == n - 1:
            L = None
            for attempt in range(max_reseeds):
                plane = sample_plane(n, j, seed + attempt)
                try:
                    L = loja_line(restrict(gens_poly, plane))
                    break
                except DegenerateRestrictionError:
                    continue
            if L is None:
                raise DegenerateRestrictionError("all line restrictions degenerate")
            verdicts.append(_verdict(
                f"chain-term-j{j}", Fraction(1, L), ratio,
                ["loja_line", "lelong_numbers"]))
        elif include_numeric:
            plane = sample_plane(n, j, seed)
            est = loja_numeric(restrict(gens_poly, plane), params)
            verdicts.append(_verdict(
                f"chain-term-j{j}", 1.0 / est.value, ratio,
                ["loja_numeric", "lelong_numbers"], tolerance))
    return verdicts


def verify_lct_dominates(
    f: Polynomial,
    allow_nondegenerate: bool = True,
) -> Verdict:
    """lct(m*J_f) >= lct(f), with a strictness indicator."""
    if check_isolated(f) == NOT_ISOLATED:
        raise InvalidInputError("germ has non-isolated singularity")
    lct_f, flag = lct_nondegenerate(f)
    mJ = product_with_maximal(jacobian_ideal(f))
    try:
        mono = monomialize(mJ)
    except NotMonomializableError:
        if not allow_nondegenerate:
            raise
        mono = monomialize(mJ, NONDEGENERATE)
    rhs = lct_monomial(mono.ideal)
    return _verdict("lct-dominates", lct_f, rhs,
                    ["lct_nondegenerate:" + flag, "lct_monomial:" + mono.mode],
                    strict=rhs > lct_f)


def probe_pham(
    a: MonomialIdeal,
    seed: int = 0,
    max_reseeds: int = 5,
) -> Verdict:
    """Evidence probe: lct(a) >= lct_1(a) + e_1/e_2 in dimension 2."""
    if a.dim != 2:
        raise InvalidInputError("probe is exact only in dimension 2")
    lv = lelong_numbers(a)
    lct = lct_monomial(a)
    candidates = []
    # generic line: order = min total degree of a generator
    gens_poly = IdealPresentation(
        2, tuple(poly(2, {v: 1}) for v in a.generators))
    for attempt in range(max_reseeds):
        plane = sample_plane(2, 1, seed + attempt)
        try:
            candidates.append(Fraction(1, loja_line(restrict(gens_poly, plane))))
            break
        except DegenerateRestrictionError:
            continue
    # the two coordinate lines
    for axis in range(2):
        orders = [g[axis] for g in a.generators
                  if all(c == 0 for i, c in enumerate(g) if i != axis)]
        if orders:
            candidates.append(Fraction(1, min(orders)))
    if not candidates:
        raise DegenerateRestrictionError("no usable line restriction")
    lct_1 = max(candidates)
    lhs = lct_1 + lv[1] / lv[2]
    return _verdict("pham-probe", lhs, lct,
                    ["loja_line", "lelong_numbers", "lct_monomial"])


def random_ideal(n: int, seed: int, budget: int) -> MonomialIdeal:
    """Seeded zero-dimensional monomial ideal: pure powers plus mixed terms."""
    if n not in (2, 3, 4):
        raise InvalidInputError("corpus dimensions are 2..4")
    if budget < 2:
        raise InvalidInputError("budget must be >= 2")
    rng = random.Random((seed * 0x9E3779B1 + n * 7 + budget) & 0xFFFFFFFFFFFFFFFF)
    axis_powers = [rng.randint(2, budget) for _ in range(n)]
    gens = [tuple(axis_powers[i] if j == i else 0 for j in range(n))
            for i in range(n)]
    for _ in range(rng.randint(0, budget)):
        for _attempt in range(20):
            v = tuple(rng.randint(0, axis_powers[i] - 1) for i in range(n))
            if sum(v) > 0:
                gens.append(v)
                break
    return MonomialIdeal.make(gens, n)


@dataclass(frozen=True)
class CorpusConfig:
    dim: int
    count: int
    seed: int = 0
    budget: int = 5
    probe: bool = True
    include_numeric: bool = False
    tolerance: float = DEFAULT_TOLERANCE


def frac_str(x) -> str:
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
    return format(float(x), ".12g")


def _verdict_dict(v: Verdict) -> dict:
    d = {
        "name": v.name,
        "lhs": frac_str(v.lhs),
        "rhs": frac_str(v.rhs),
        "margin": frac_str(v.margin),
        "holds": v.holds,
        "numeric": v.numeric,
        "tolerance": v.tolerance,
    }
    if v.strict is not None:
        d["strict"] = v.strict
    return d


@dataclass
class Report:
    input: str
    n: int
    ideal_generators: list[str]
    invariants: dict
    verdicts: list[Verdict]
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "input": self.input,
            "n": self.n,
            "ideal": {"generators": self.ideal_generators},
            "invariants": self.invariants,
            "verdicts": [_verdict_dict(v) for v in self.verdicts],
            "meta": {
                "seed": self.meta.get("seed", 0),
                "version": __version__,
                "timings_ms": self.meta.get("timings_ms"),
            },
        }

    @property
    def exit_code(self) -> int:
        exact_fail = any(not v.holds and not v.numeric for v in self.verdicts)
        numeric_fail = any(not v.holds and v.numeric for v in self.verdicts)
        if exact_fail:
            return EXIT_EXACT_FAILURE
        if numeric_fail:
            return EXIT_NUMERIC_FAILURE
        return EXIT_OK


@dataclass
class CorpusReport:
    config: CorpusConfig
    cases: int
    summaries: dict  # verdict name -> {count, failures, min_margin, worst_seed}
    failures: list  # reproduction data
    meta: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "corpus": {
                "dim": self.config.dim,
                "count": self.config.count,
                "seed": self.config.seed,
                "budget": self.config.budget,
            },
            "cases": self.cases,
            "summaries": self.summaries,
            "failures": self.failures,
            "meta": {
                "seed": self.config.seed,
                "version": __version__,
                "timings_ms": self.meta.get("timings_ms"),
            },
        }

    @property
    def exit_code(self) -> int:
        if any(f["numeric"] is False for f in self.failures):
            return EXIT_EXACT_FAILURE
        if self.failures:
            return EXIT_NUMERIC_FAILURE
        return EXIT_OK


def _corpus_case(config: CorpusConfig, index: int):
    a = random_ideal(config.dim, config.seed + index, config.budget)
    verdicts = verify_chain(
        a, seed=config.seed + index, tolerance=config.tolerance,
        include_numeric=config.include_numeric)
    if config.dim == 2 and config.probe:
        verdicts.append(probe_pham(a, seed=config.seed + index))
    return a, verdicts


def corpus_run(config: CorpusConfig, workers: int = 1) -> CorpusReport:
    """Run chain (and probe) verdicts over a seeded corpus; deterministic."""
    indices = list(range(config.count))
    if workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda i: _corpus_case(config, i), indices))
    else:
        results = [_corpus_case(config, i) for i in indices]

    summaries: dict[str, dict] = {}
    failures = []
    for index, (a, verdicts) in zip(indices, results):
        for v in verdicts:
            s = summaries.setdefault(v.name, {
                "count": 0, "failures": 0, "min_margin": None, "worst_index": None})
            s["count"] += 1
            margin = v.margin
            if s["min_margin"] is None or float(margin) < float(s["_min_raw"]):
                s["min_margin"] = frac_str(margin)
                s["_min_raw"] = margin
                s["worst_index"] = index
            if not v.holds:
                s["failures"] += 1
                failures.append({
                    "index": index,
                    "seed": config.seed + index,
                    "ideal": [list(g) for g in a.generators],
                    "verdict": _verdict_dict(v),
                    "numeric": v.numeric,
                })
    for s in summaries.values():
        s.pop("_min_raw", None)
    return CorpusReport(config, config.count, summaries, failures)


def _render_text(d: dict) -> str:
    lines = []

    def walk(obj, indent=0):
        pad = "  " * indent
        if isinstance(obj, dict):
            for k, v in obj.items():
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {v}")
        elif isinstance(obj, list):
            for v in obj:
                if isinstance(v, (dict, list)):
                    lines.append(f"{pad}-")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {v}")

    walk(d)
    return "\n".join(lines) + "\n"


def emit_report(report, fmt: str = "text") -> str:
    """Byte-stable serialization of a Report or CorpusReport."""
    d = report.to_dict()
    if fmt == "json":
        return json.dumps(d, indent=2) + "\n"
    if fmt == "text":
        return _render_text(d)
    raise InvalidInputError(f"unknown format {fmt!r}")
