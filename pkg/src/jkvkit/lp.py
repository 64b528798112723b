"""Exact rational linear programming: two-phase simplex with Bland's rule.

No tolerances anywhere; all comparisons are exact over Fraction.  Bland's
pivoting rule guarantees termination, and the fixed column layout makes
every answer deterministic given the input order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_MAX_PIVOTS = 200_000


@dataclass(frozen=True)
class LpResult:
    status: str
    value: Fraction | None
    x: tuple[Fraction, ...] | None


def _pivot(tab, zrow, basis, row, col):
    piv = tab[row][col]
    inv = 1 / piv
    tab[row] = [x * inv for x in tab[row]]
    prow = tab[row]
    for i, r in enumerate(tab):
        if i != row and r[col] != 0:
            f = r[col]
            tab[i] = [x - f * y for x, y in zip(r, prow)]
    if zrow[col] != 0:
        f = zrow[col]
        for j in range(len(zrow)):
            zrow[j] -= f * prow[j]
    basis[row] = col


def _run_simplex(tab, zrow, basis):
    """Maximize with z-row convention zrow[j] = -reduced_cost; returns True, or False if unbounded."""
    ncols = len(zrow) - 1
    for _ in range(_MAX_PIVOTS):
        enter = next((j for j in range(ncols) if zrow[j] < 0), None)
        if enter is None:
            return True
        best = None
        for i, r in enumerate(tab):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(tab, zrow, basis, best[1], enter)
    raise RuntimeError("simplex pivot limit exceeded")


def solve_lp(num_vars, constraints, objective, maximize=True, nonneg=None):
    """Solve max/min objective*x subject to constraints.

    constraints: iterable of (coeffs, rel, rhs) with rel one of "<=", ">=", "=".
    nonneg[j] declares x_j >= 0; variables default to free (split internally).
    """
    objective = [Fraction(c) for c in objective]
    if len(objective) != num_vars:
        raise ValueError("objective length mismatch")
    if nonneg is None:
        nonneg = [False] * num_vars
    rows = []
    for coeffs, rel, rhs in constraints:
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) != num_vars:
            raise ValueError("constraint length mismatch")
        if rel not in ("<=", ">=", "="):
            raise ValueError(f"bad relation {rel!r}")
        rows.append((coeffs, rel, Fraction(rhs)))

    # Column layout: per-variable columns (one or a +/- pair), then slacks.
    col_of_var: list[tuple[int, int | None]] = []
    ncols = 0
    for j in range(num_vars):
        if nonneg[j]:
            col_of_var.append((ncols, None))
            ncols += 1
        else:
            col_of_var.append((ncols, ncols + 1))
            ncols += 2
    slack_of_row = []
    for coeffs, rel, rhs in rows:
        if rel == "=":
            slack_of_row.append(None)
        else:
            slack_of_row.append(ncols)
            ncols += 1

    m = len(rows)
    tab = []
    rhs_col = ncols + m  # artificials occupy [ncols, ncols+m)
    for i, (coeffs, rel, rhs) in enumerate(rows):
        line = [Fraction(0)] * (rhs_col + 1)
        for j, c in enumerate(coeffs):
            pos, neg = col_of_var[j]
            line[pos] = c
            if neg is not None:
                line[neg] = -c
        if slack_of_row[i] is not None:
            line[slack_of_row[i]] = Fraction(1) if rel == "<=" else Fraction(-1)
        line[-1] = rhs
        if line[-1] < 0:
            line = [-x for x in line]
        tab.append(line)
    basis = []
    for i in range(m):
        art = ncols + i
        tab[i][art] = Fraction(1)
        basis.append(art)

    # Phase 1: maximize -(sum of artificials).
    zrow = [Fraction(0)] * (rhs_col + 1)
    for i in range(m):
        zrow[ncols + i] = Fraction(1)
    for i in range(m):
        f = zrow[basis[i]]
        if f != 0:
            for j in range(rhs_col + 1):
                zrow[j] -= f * tab[i][j]
    if not _run_simplex(tab, zrow, basis):
        raise RuntimeError("phase 1 cannot be unbounded")
    if zrow[-1] != 0:
        return LpResult(INFEASIBLE, None, None)

    # Drive remaining artificials out of the basis (degenerate rows).
    drop = []
    for i in range(m):
        if basis[i] >= ncols:
            col = next((j for j in range(ncols) if tab[i][j] != 0), None)
            if col is None:
                drop.append(i)
            else:
                _pivot(tab, zrow, basis, i, col)
    for i in reversed(drop):
        del tab[i]
        del basis[i]

    # Phase 2 on structural columns only.
    tab = [row[:ncols] + [row[-1]] for row in tab]
    sense = 1 if maximize else -1
    zrow = [Fraction(0)] * (ncols + 1)
    for j in range(num_vars):
        pos, neg = col_of_var[j]
        zrow[pos] = -sense * objective[j]
        if neg is not None:
            zrow[neg] = sense * objective[j]
    for i, b in enumerate(basis):
        f = zrow[b]
        if f != 0:
            for j in range(ncols + 1):
                zrow[j] -= f * tab[i][j]
    if not _run_simplex(tab, zrow, basis):
        return LpResult(UNBOUNDED, None, None)

    values = {b: tab[i][-1] for i, b in enumerate(basis)}
    x = []
    for j in range(num_vars):
        pos, neg = col_of_var[j]
        v = values.get(pos, Fraction(0))
        if neg is not None:
            v -= values.get(neg, Fraction(0))
        x.append(v)
    return LpResult(OPTIMAL, sense * zrow[-1], tuple(x))


def lp_solve(a_rows, b, objective):
    """Maximize objective*x subject to A*x >= b over free rational variables.

    Returns (optimum, witness) for solvable programs and the string verdicts
    "infeasible" / "unbounded" otherwise.
    """
    a_rows = [list(r) for r in a_rows]
    nvars = len(objective)
    cons = [(row, ">=", rhs) for row, rhs in zip(a_rows, b)]
    res = solve_lp(nvars, cons, list(objective), maximize=True)
    if res.status != OPTIMAL:
        return res.status
    return res.value, res.x
