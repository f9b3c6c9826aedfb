"""Exact rational linear programming: two-phase tableau simplex with Bland's rule.

Only what the trace computations need: maximise ``c.x`` subject to
``A_ub x <= b_ub``, ``A_eq x == b_eq`` and ``x >= 0``, everything in
:class:`fractions.Fraction`.  Bland's rule guarantees termination on the
highly degenerate cone programs produced by graph traces.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    x: list = None
    value: Fraction = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r, col):
        row = self.rows[r]
        piv = row[col]
        if piv != 1:
            inv = 1 / piv
            row[:] = [a * inv for a in row]
            self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[col]
            if f:
                other[:] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = col

    def reduced_costs(self, cost):
        """Reduced costs c_j - c_B B^-1 A_j and the current objective value."""
        red = list(cost)
        value = Fraction(0)
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[r]
                red = [x - cb * a for x, a in zip(red, row)]
                value += cb * self.rhs[r]
        return red, value

    def optimise(self, cost, allowed):
        """Maximise cost over the tableau, entering only columns in ``allowed``."""
        while True:
            red, value = self.reduced_costs(cost)
            enter = next((j for j in allowed if red[j] > 0), None)
            if enter is None:
                return OPTIMAL, value
            best = None
            for r, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    key = (self.rhs[r] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return UNBOUNDED, None
            self.pivot(best[1], enter)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> LPResult:
    """Maximise ``c.x`` exactly.  All inputs are converted to Fraction."""
    n = len(c)
    c = [Fraction(v) for v in c]
    rows, rhs = [], []
    n_slack = len(A_ub)
    n_cols = n + n_slack
    needs_art = []
    for i, (a, b) in enumerate(zip(A_ub, b_ub)):
        row = [Fraction(v) for v in a] + [Fraction(0)] * n_slack
        row[n + i] = Fraction(1)
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
            needs_art.append(True)
        else:
            needs_art.append(False)
        rows.append(row)
        rhs.append(b)
    for a, b in zip(A_eq, b_eq):
        row = [Fraction(v) for v in a] + [Fraction(0)] * n_slack
        b = Fraction(b)
        if b < 0:
            row = [-v for v in row]
            b = -b
        rows.append(row)
        rhs.append(b)
        needs_art.append(True)

    art_rows = [r for r, flag in enumerate(needs_art) if flag]
    total = n_cols + len(art_rows)
    basis = []
    for r, row in enumerate(rows):
        row.extend([Fraction(0)] * len(art_rows))
    for r in range(len(rows)):
        if needs_art[r]:
            col = n_cols + art_rows.index(r)
            rows[r][col] = Fraction(1)
            basis.append(col)
        else:
            basis.append(n + r)
    tab = _Tableau(rows, rhs, basis)

    if art_rows:
        phase1 = [Fraction(0)] * n_cols + [Fraction(-1)] * len(art_rows)
        status, value = tab.optimise(phase1, range(total))
        if value < 0:
            return LPResult(INFEASIBLE)
        # drive zero-level artificials out of the basis, dropping redundant rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= n_cols:
                col = next((j for j in range(n_cols) if tab.rows[r][j] != 0), None)
                if col is None:
                    del tab.rows[r], tab.rhs[r], tab.basis[r]
                    continue
                tab.pivot(r, col)
            r += 1

    cost = c + [Fraction(0)] * (total - n)
    status, value = tab.optimise(cost, range(n_cols))
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * total
    for r, b in enumerate(tab.basis):
        x[b] = tab.rhs[r]
    return LPResult(OPTIMAL, x[:n], value)


def rank(matrix) -> int:
    """Rank over the rationals by Gaussian elimination."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return 0
    rk = 0
    n_cols = len(rows[0])
    for col in range(n_cols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk]
        for r in range(len(rows)):
            if r != rk and rows[r][col] != 0:
                f = rows[r][col] / p[col]
                rows[r] = [a - f * b for a, b in zip(rows[r], p)]
        rk += 1
    return rk
