"""Exact rational linear programming (dense two-phase simplex).

Small systems only: every entry is a Fraction and every pivot is exact, so
an optimum is a certificate, not an approximation.  Bland's rule (smallest
eligible entering index, ratio ties broken by smallest basis index) makes
the pivot sequence deterministic and guarantees termination.
"""

from __future__ import annotations

from fractions import Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def simplex_maximize(A: list[list[Fraction]], b: list[Fraction],
                     objective: list[Fraction]):
    """Maximize objective . x subject to A x = b, x >= 0.

    Returns (status, x, value); status is "optimal" or "infeasible".
    Raises ArithmeticError on an unbounded program (callers here always
    pose bounded ones).
    """
    m = len(A)
    n = len(A[0]) if m else 0
    tableau = []
    for i in range(m):
        row = list(A[i])
        rhs = b[i]
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        tableau.append(row + [_ZERO] * m + [rhs])
    for i in range(m):
        tableau[i][n + i] = _ONE
    basis = [n + i for i in range(m)]
    total = n + m

    def pivot(row: int, col: int) -> None:
        pr = tableau[row]
        pv = pr[col]
        if pv != 1:
            tableau[row] = pr = [v / pv for v in pr]
        for i in range(m):
            if i != row and tableau[i][col]:
                factor = tableau[i][col]
                ri = tableau[i]
                tableau[i] = [ri[k] - factor * pr[k] for k in range(total + 1)]
        basis[row] = col

    def optimize(cost: list[Fraction], allowed: int) -> Fraction:
        while True:
            reduced = list(cost[:allowed])
            for i, bi in enumerate(basis):
                cb = cost[bi]
                if cb:
                    row = tableau[i]
                    for k in range(allowed):
                        if row[k]:
                            reduced[k] -= cb * row[k]
            entering = -1
            basic = set(basis)
            for k in range(allowed):
                if reduced[k] > 0 and k not in basic:
                    entering = k
                    break
            if entering < 0:
                return sum((cost[bi] * tableau[i][total] for i, bi in enumerate(basis)),
                           _ZERO)
            leaving, best = -1, None
            for i in range(m):
                a = tableau[i][entering]
                if a > 0:
                    ratio = tableau[i][total] / a
                    if best is None or ratio < best or (
                            ratio == best and basis[i] < basis[leaving]):
                        leaving, best = i, ratio
            if leaving < 0:
                raise ArithmeticError("unbounded linear program")
            pivot(leaving, entering)

    phase1 = [_ZERO] * n + [-_ONE] * m + [_ZERO]
    if optimize(phase1, total) != 0:
        return "infeasible", None, None
    for i in range(m):
        if basis[i] >= n:  # degenerate artificial still basic
            for k in range(n):
                if tableau[i][k]:
                    pivot(i, k)
                    break
    phase2 = list(objective) + [_ZERO] * m + [_ZERO]
    value = optimize(phase2, n)
    x = [_ZERO] * n
    for i, bi in enumerate(basis):
        if bi < n:
            x[bi] = tableau[i][total]
    return "optimal", x, value


def max_min_component(columns, rhs):
    """Maximize t over { u : sum_i u_i col_i = rhs, u_i >= t, 0 <= t <= 1 }.

    Returns (t_star, u) for a feasible program and (None, None) otherwise.
    A strictly positive solution of the equality system exists iff
    t_star > 0: scaling is fixed by the equalities, and capping t at 1
    keeps the program bounded without affecting the sign of the optimum.
    """
    n = len(columns)
    m_eq = len(rhs)
    nvars = 2 * n + 2  # u_0..u_{n-1}, t, slack_0..slack_{n-1}, cap slack
    A: list[list[Fraction]] = []
    b: list[Fraction] = []
    for row_idx in range(m_eq):
        row = [_ZERO] * nvars
        for i in range(n):
            v = columns[i][row_idx]
            if v:
                row[i] = Fraction(v)
        A.append(row)
        b.append(Fraction(rhs[row_idx]))
    for i in range(n):
        row = [_ZERO] * nvars
        row[i] = _ONE
        row[n] = -_ONE
        row[n + 1 + i] = -_ONE
        A.append(row)
        b.append(_ZERO)
    cap = [_ZERO] * nvars
    cap[n] = _ONE
    cap[2 * n + 1] = _ONE
    A.append(cap)
    b.append(_ONE)
    objective = [_ZERO] * nvars
    objective[n] = _ONE
    status, x, value = simplex_maximize(A, b, objective)
    if status != "optimal":
        return None, None
    return value, tuple(x[:n])
