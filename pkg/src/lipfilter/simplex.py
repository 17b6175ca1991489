"""Exact two-phase simplex over Fractions with Bland's rule.

Solves  min c.x  subject to  A x >= b, x >= 0.  Dense tableaux; intended
for the small LPs the distance oracles build (tens of variables).  Bland's
pivoting rule guarantees termination without cycling.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import Error


class LPInfeasible(Error):
    pass


class LPUnbounded(Error):
    pass


def solve_min(c, A, b):
    """Returns (optimal value, x) for min c.x s.t. A x >= b, x >= 0."""
    m = len(A)
    n = len(c)
    c = [Fraction(v) for v in c]

    # rows become a.x - s_i = b_i with b_i >= 0 after a possible sign flip;
    # flipped rows get slack coefficient +1 and need no artificial variable
    rows = []
    art_rows = []
    for i in range(m):
        coeffs = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        slack = Fraction(-1)
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
            slack = Fraction(1)
        rows.append((coeffs, slack, rhs))
        if slack < 0 and rhs > 0:
            art_rows.append(i)

    n_slack = m
    n_art = len(art_rows)
    width = n + n_slack + n_art + 1
    tableau = []
    basis = []
    art_col_of = {}
    next_art = n + n_slack
    for i, (coeffs, slack, rhs) in enumerate(rows):
        row = [Fraction(0)] * width
        row[:n] = coeffs
        row[n + i] = slack
        row[-1] = rhs
        if i in art_rows:
            art_col_of[i] = next_art
            row[next_art] = Fraction(1)
            basis.append(next_art)
            next_art += 1
        else:
            if slack < 0:
                # slack enters with a positive coefficient after negating
                row = [-v for v in row]
            basis.append(n + i)
        tableau.append(row)

    def pivot(r, col):
        piv = tableau[r][col]
        tableau[r] = [v / piv for v in tableau[r]]
        for rr in range(len(tableau)):
            if rr != r and tableau[rr][col] != 0:
                factor = tableau[rr][col]
                tableau[rr] = [
                    a - factor * p for a, p in zip(tableau[rr], tableau[r])
                ]
        basis[r] = col

    def reduced_costs(cost):
        z = [Fraction(0)] * width
        for r, bcol in enumerate(basis):
            cb = cost[bcol]
            if cb != 0:
                for j in range(width):
                    z[j] += cb * tableau[r][j]
        return [cost[j] - z[j] for j in range(width - 1)], z[-1]

    def run(cost, allowed):
        while True:
            red, _ = reduced_costs(cost)
            entering = None
            for j in range(allowed):
                if red[j] < 0:
                    entering = j  # Bland: smallest index
                    break
            if entering is None:
                return
            leaving = None
            best = None
            for r in range(len(tableau)):
                a = tableau[r][entering]
                if a > 0:
                    ratio = tableau[r][-1] / a
                    if best is None or ratio < best or (
                        ratio == best and basis[r] < basis[leaving]
                    ):
                        best = ratio
                        leaving = r
            if leaving is None:
                raise LPUnbounded("objective unbounded below")
            pivot(leaving, entering)

    if n_art:
        phase1 = [Fraction(0)] * width
        for i in art_rows:
            phase1[art_col_of[i]] = Fraction(1)
        run(phase1, width - 1)
        _, obj = reduced_costs(phase1)
        if obj != 0:
            raise LPInfeasible("phase 1 optimum is positive")
        # pivot lingering artificials out of the basis where possible
        for r, bcol in enumerate(basis):
            if bcol >= n + n_slack:
                for j in range(n + n_slack):
                    if tableau[r][j] != 0:
                        pivot(r, j)
                        break

    phase2 = [Fraction(0)] * width
    phase2[:n] = c
    run(phase2, n + n_slack)

    x = [Fraction(0)] * n
    for r, bcol in enumerate(basis):
        if bcol < n:
            x[bcol] = tableau[r][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))
    return value, x
