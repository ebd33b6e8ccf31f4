"""Command-line interface.

Subcommands: compute, verify-main, verify-chain, verify-lct, probe-pham,
corpus.  Ideal inputs are ';'-separated generators in the polynomial grammar;
reports are stable text or JSON with rationals as "p/q" strings.
"""
from __future__ import annotations

import argparse
import sys
import time
from .exactgeom import MonomialIdeal
from .germs import (
    NONDEGENERATE,
    NotMonomializableError,
    format_polynomial,
    jacobian_ideal,
    lct_nondegenerate,
    monomialize,
    parse_polynomial,
    product_with_maximal,
)
from .invariants import (
    UnitIdealError,
    dh_lower_bound,
    lct_monomial,
    lelong_numbers,
    loja_monomial,
)
from .sections import LojaParams, polar_invariant
from .verify import (
    CorpusConfig,
    EXIT_EXACT_FAILURE,
    Report,
    corpus_run,
    emit_report,
    frac_str,
    probe_pham,
    verify_chain,
    verify_lct_dominates,
    verify_main,
)


def _parse_ideal(text: str, dim: int | None) -> MonomialIdeal:
    parts = [p.strip() for p in text.split(";") if p.strip()]
    polys = [parse_polynomial(p, dim) for p in parts]
    n = dim or max(p.dim for p in polys)
    exps = []
    for p in polys:
        if len(p.terms) != 1:
            raise NotMonomializableError(
                f"ideal generator {format_polynomial(p)} is not a monomial")
        exps.append(next(iter(p.terms)))
    exps = [v + (0,) * (n - len(v)) for v in exps]
    return MonomialIdeal.make(exps, n)


def _fmt(args) -> str:
    return "json" if args.json else "text"


def _loja_params(args) -> LojaParams:
    return LojaParams(tolerance=args.tolerance)


def _ideal_invariants(a: MonomialIdeal) -> dict:
    try:
        lct = frac_str(lct_monomial(a))
    except UnitIdealError:
        lct = "unit-ideal"
    inv = {"lct": lct, "L": None, "e": [], "theta": [], "exact": True}
    if a.zero_dimensional and not a.is_unit:
        inv["L"] = frac_str(loja_monomial(a))
        lv = lelong_numbers(a)
        inv["e"] = [frac_str(e) for e in lv.e]
        inv["dh_lower_bound"] = frac_str(dh_lower_bound(a))
    return inv


def _germ_invariants(f, seed: int, params: LojaParams, allow_nondeg: bool) -> dict:
    lct_f, flag = lct_nondegenerate(f)
    inv = {"lct_f": frac_str(lct_f), "lct_f_mode": flag}
    mJ = product_with_maximal(jacobian_ideal(f))
    try:
        mono = monomialize(mJ)
    except NotMonomializableError:
        mono = monomialize(mJ, NONDEGENERATE) if allow_nondeg else None
    exact = mono is not None and mono.exact
    thetas = [polar_invariant(f, j, seed=seed, params=params)
              for j in range(f.dim)]
    inv["theta"] = [
        frac_str(t.rational) if t.rational is not None else frac_str(t.value)
        for t in thetas
    ]
    inv["theta_methods"] = [t.method for t in thetas]
    if mono is not None:
        a = mono.ideal
        inv["lct"] = frac_str(lct_monomial(a))
        if a.zero_dimensional:
            inv["L"] = frac_str(loja_monomial(a))
            lv = lelong_numbers(a)
            inv["e"] = [frac_str(e) for e in lv.e]
    inv["exact"] = exact and all(t.rational is not None for t in thetas)
    return inv


def _single_report(args, input_text, n, gens, invariants, verdicts) -> int:
    report = Report(
        input=input_text,
        n=n,
        ideal_generators=gens,
        invariants=invariants,
        verdicts=verdicts,
        meta={"seed": args.seed, "timings_ms": args.elapsed_ms},
    )
    sys.stdout.write(emit_report(report, _fmt(args)))
    return report.exit_code


def _cmd_compute(args) -> int:
    if ";" in args.input or args.ideal:
        a = _parse_ideal(args.input, args.dim)
        gens = [format_polynomial_from_exp(g) for g in a.generators]
        return _single_report(args, args.input, a.dim, gens,
                              _ideal_invariants(a), [])
    f = parse_polynomial(args.input, args.dim)
    inv = _germ_invariants(f, args.seed, _loja_params(args), args.nondegenerate)
    return _single_report(args, args.input, f.dim, [format_polynomial(f)], inv, [])


def format_polynomial_from_exp(v) -> str:
    from .germs import poly

    return format_polynomial(poly(len(v), {v: 1}))


def _cmd_verify_main(args) -> int:
    f = parse_polynomial(args.input, args.dim)
    verdict, thetas = verify_main(
        f, seed=args.seed, tolerance=args.tolerance,
        params=_loja_params(args), allow_nondegenerate=args.nondegenerate)
    inv = {
        "theta": [frac_str(t.rational) if t.rational is not None
                  else frac_str(t.value) for t in thetas],
        "theta_methods": [t.method for t in thetas],
        "exact": not verdict.numeric,
    }
    return _single_report(args, args.input, f.dim,
                          [format_polynomial(f)], inv, [verdict])


def _cmd_verify_chain(args) -> int:
    a = _parse_ideal(args.input, args.dim)
    verdicts = verify_chain(
        a, seed=args.seed, tolerance=args.tolerance,
        include_numeric=args.numeric)
    gens = [format_polynomial_from_exp(g) for g in a.generators]
    return _single_report(args, args.input, a.dim, gens,
                          _ideal_invariants(a), verdicts)


def _cmd_verify_lct(args) -> int:
    f = parse_polynomial(args.input, args.dim)
    verdict = verify_lct_dominates(f, allow_nondegenerate=args.nondegenerate)
    lct_f, flag = lct_nondegenerate(f)
    inv = {"lct_f": frac_str(lct_f), "lct_f_mode": flag, "exact": not verdict.numeric}
    return _single_report(args, args.input, f.dim,
                          [format_polynomial(f)], inv, [verdict])


def _cmd_probe_pham(args) -> int:
    a = _parse_ideal(args.input, args.dim)
    verdict = probe_pham(a, seed=args.seed)
    gens = [format_polynomial_from_exp(g) for g in a.generators]
    code = _single_report(args, args.input, a.dim, gens,
                          _ideal_invariants(a), [verdict])
    return code


def _cmd_corpus(args) -> int:
    config = CorpusConfig(
        dim=args.dim or 2,
        count=args.count,
        seed=args.seed,
        budget=args.budget,
        include_numeric=args.numeric,
        tolerance=args.tolerance,
    )
    report = corpus_run(config, workers=args.workers)
    if args.timings:
        report.meta["timings_ms"] = args.elapsed_ms()
    sys.stdout.write(emit_report(report, _fmt(args)))
    return report.exit_code


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tolerance", type=float, default=0.05,
                   help="relative tolerance for numeric verdicts")
    p.add_argument("--budget", type=int, default=5,
                   help="generator degree budget (corpus)")
    p.add_argument("--dim", type=int, default=None,
                   help="ambient dimension (default: inferred)")
    p.add_argument("--nondegenerate", action="store_true",
                   help="permit flagged nondegenerate-assumed monomialization")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lctlab",
        description="Exact singularity invariants and inequality verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="invariant bundle of a germ or ideal")
    p.add_argument("input")
    p.add_argument("--ideal", action="store_true",
                   help="treat the input as a one-generator monomial ideal")
    _add_common(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("verify-main", help="polar-invariant sum vs lct(m*J_f)")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_main)

    p = sub.add_parser("verify-chain", help="Lelong-ratio chain for an ideal")
    p.add_argument("input")
    p.add_argument("--numeric", action="store_true",
                   help="include numeric intermediate-codimension terms")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_chain)

    p = sub.add_parser("verify-lct", help="lct(m*J_f) >= lct(f)")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=_cmd_verify_lct)

    p = sub.add_parser("probe-pham", help="hyperplane-restriction probe (n=2)")
    p.add_argument("input")
    _add_common(p)
    p.set_defaults(func=_cmd_probe_pham)

    p = sub.add_parser("corpus", help="randomized corpus run")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--numeric", action="store_true")
    p.add_argument("--timings", action="store_true",
                   help="record wall time (breaks byte-stability)")
    _add_common(p)
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    start = time.monotonic()
    args.elapsed_ms = None
    if getattr(args, "timings", False):
        args.elapsed_ms = lambda: round((time.monotonic() - start) * 1000.0, 3)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_EXACT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
