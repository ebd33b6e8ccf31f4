"""Exact rational simplex with Bland's anti-cycling rule.

Variables are implicitly nonnegative.  Constraints are (coeffs, op, rhs)
with op in {"<=", ">=", "=="}; all data is converted to Fraction.  The solver
is deterministic for a fixed input ordering and never panics on degenerate
bases; infeasible/unbounded problems are reported via the status field.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Fraction | None
    x: tuple[Fraction, ...] | None


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [c / piv for c in tableau[row]]
    for r in range(len(tableau)):
        if r != row and tableau[r][col] != 0:
            factor = tableau[r][col]
            tableau[r] = [a - factor * b for a, b in zip(tableau[r], tableau[row])]
    basis[row] = col


def _run_simplex(tableau, basis, cost, ncols):
    """Minimize cost (a row of reduced costs appended last); Bland's rule."""
    m = len(basis)
    while True:
        enter = next((j for j in range(ncols) if cost[j] < 0), None)
        if enter is None:
            return "optimal"
        leave, best = None, None
        for r in range(m):
            a = tableau[r][enter]
            if a > 0:
                ratio = tableau[r][-1] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            return "unbounded"
        _pivot(tableau, basis, leave, enter)
        # update reduced costs
        factor = cost[enter]
        for j in range(ncols + 1):
            cost[j] -= factor * tableau[leave][j]


def solve_lp(objective, constraints, n_vars: int, maximize: bool = False) -> LPResult:
    """Optimize objective . x subject to constraints, x >= 0, exactly."""
    obj = [Fraction(c) for c in objective]
    if len(obj) != n_vars:
        raise ValueError("objective length mismatch")
    if maximize:
        obj = [-c for c in obj]

    rows = []
    ops = []
    for coeffs, op, rhs in constraints:
        coeffs = [Fraction(c) for c in coeffs]
        rhs = Fraction(rhs)
        if len(coeffs) != n_vars:
            raise ValueError("constraint length mismatch")
        if op not in ("<=", ">=", "=="):
            raise ValueError(f"bad constraint op {op!r}")
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
            op = {"<=": ">=", ">=": "<=", "==": "=="}[op]
        rows.append((coeffs, rhs))
        ops.append(op)

    m = len(rows)
    n_slack = sum(1 for op in ops if op in ("<=", ">="))
    n_art = sum(1 for op in ops if op in (">=", "=="))
    ncols = n_vars + n_slack + n_art

    tableau = []
    basis = []
    slack_at = n_vars
    art_at = n_vars + n_slack
    art_cols = []
    for (coeffs, rhs), op in zip(rows, ops):
        row = coeffs + [Fraction(0)] * (n_slack + n_art) + [rhs]
        if op == "<=":
            row[slack_at] = Fraction(1)
            basis.append(slack_at)
            slack_at += 1
        elif op == ">=":
            row[slack_at] = Fraction(-1)
            slack_at += 1
            row[art_at] = Fraction(1)
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        else:
            row[art_at] = Fraction(1)
            basis.append(art_at)
            art_cols.append(art_at)
            art_at += 1
        tableau.append(row)

    # phase 1: minimize sum of artificials
    if art_cols:
        cost = [Fraction(0)] * (ncols + 1)
        for j in art_cols:
            cost[j] = Fraction(1)
        for r, b in enumerate(basis):
            if cost[b] != 0:
                factor = cost[b]
                for j in range(ncols + 1):
                    cost[j] -= factor * tableau[r][j]
        status = _run_simplex(tableau, basis, cost, ncols)
        if status != "optimal" or -cost[-1] != 0:
            return LPResult("infeasible", None, None)
        # drive remaining artificials out of the basis where possible
        for r in range(m):
            if basis[r] in art_cols:
                col = next((j for j in range(n_vars + n_slack)
                            if tableau[r][j] != 0), None)
                if col is not None:
                    _pivot(tableau, basis, r, col)
        # forbid artificials from re-entering
        for row in tableau:
            for j in art_cols:
                row[j] = Fraction(0)

    # phase 2
    cost = obj + [Fraction(0)] * (n_slack + n_art) + [Fraction(0)]
    for j in art_cols:
        cost[j] = Fraction(0)
    for r, b in enumerate(basis):
        if cost[b] != 0:
            factor = cost[b]
            for j in range(ncols + 1):
                cost[j] -= factor * tableau[r][j]
    status = _run_simplex(tableau, basis, cost, ncols)
    if status == "unbounded":
        return LPResult("unbounded", None, None)

    x = [Fraction(0)] * n_vars
    for r, b in enumerate(basis):
        if b < n_vars:
            x[b] = tableau[r][-1]
    value = sum(c * v for c, v in zip(obj, x))
    if maximize:
        value = -value
    return LPResult("optimal", value, tuple(x))
