#!/usr/bin/env python3
"""Compare the numeric Lojasiewicz estimator against exact values.

Draws random zero-dimensional monomial ideals in the plane, computes the
exact exponent from the Newton polyhedron, and reports the estimator's
relative error and multi-seed spread for each case.
"""
import argparse

from lctlab.germs import IdealPresentation, poly
from lctlab.invariants import loja_monomial
from lctlab.sections import LojaParams, loja_numeric
from lctlab.verify import random_ideal


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget", type=int, default=5)
    ap.add_argument("--starts", type=int, default=64)
    ap.add_argument("--iters", type=int, default=250)
    args = ap.parse_args()

    params = LojaParams(starts=args.starts, iters=args.iters)
    print(f"{'case':>4} {'exact':>7} {'estimate':>10} {'rel err':>9} {'spread':>9}")
    worst = 0.0
    for i in range(args.count):
        a = random_ideal(2, args.seed * 100_000 + i, args.budget)
        exact = float(loja_monomial(a))
        pres = IdealPresentation(2, tuple(poly(2, {g: 1}) for g in a.generators))
        est = loja_numeric(pres, params)
        err = abs(est.value - exact) / exact
        worst = max(worst, err)
        print(f"{i:>4} {exact:>7.3f} {est.value:>10.4f} {err:>9.4f} "
              f"{est.spread / exact:>9.4f}")
    print(f"max relative error: {worst:.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
