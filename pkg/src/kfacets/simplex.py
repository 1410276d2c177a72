"""Exact rational linear programming by primal simplex with Bland's rule.

Scope is deliberately narrow: maximize c.x subject to A x <= b over *free*
variables, where every entry of b is >= 0 so the origin is feasible and the
all-slack basis starts the iteration.  Every face / separation query in this
package is posed in that shape, which removes any need for a second phase or
artificial variables.

The tableau is kept fraction-free: all entries are integers M[i][j] with one
shared positive denominator D (integer pivoting, as in Bareiss elimination),
so the inner loop is pure bigint arithmetic.  Bland's rule (lowest variable
index enters, lowest basic index breaks ratio ties) makes the iteration
deterministic and cycle-free.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

from .errors import InputError


class Unbounded(RuntimeError):
    """The LP has rays of unbounded improvement (never expected here)."""


def maximize(
    objective: Sequence[Fraction],
    rows: Sequence[tuple[Sequence[Fraction], Fraction]],
) -> tuple[Fraction, list[Fraction]]:
    """Solve max objective.x s.t. coeffs.x <= rhs for each row, x free.

    Every rhs must be >= 0.  Returns (optimal value, one optimal x).
    """
    nv = len(objective)
    m = len(rows)
    if m == 0:
        raise InputError("need at least one constraint row")
    ncols = 2 * nv + m          # x+ columns, x- columns, slack columns
    rhs_col = ncols

    tableau: list[list[int]] = []
    for i, (coeffs, rhs) in enumerate(rows):
        if len(coeffs) != nv:
            raise InputError("constraint width does not match objective")
        if rhs < 0:
            raise InputError("rhs must be nonnegative (origin-feasible form)")
        mult = lcm(rhs.denominator, *(c.denominator for c in coeffs))
        irow = [0] * (ncols + 1)
        for j, c in enumerate(coeffs):
            v = int(c * mult)
            irow[j] = v
            irow[nv + j] = -v
        irow[2 * nv + i] = 1    # slack variable scaled into the row
        irow[rhs_col] = int(rhs * mult)
        tableau.append(irow)

    obj_scale = lcm(1, *(c.denominator for c in objective))
    zrow = [0] * (ncols + 1)
    for j, c in enumerate(objective):
        v = int(c * obj_scale)
        zrow[j] = -v
        zrow[nv + j] = v
    tableau.append(zrow)

    basis = [2 * nv + i for i in range(m)]
    denom = 1

    while True:
        entering = next((j for j in range(ncols) if zrow[j] < 0), None)
        if entering is None:
            break
        # ratio test over rows with positive entry in the entering column
        leave = -1
        lnum = lden = 0
        for i in range(m):
            a = tableau[i][entering]
            if a <= 0:
                continue
            b = tableau[i][rhs_col]
            if leave < 0 or b * lden < lnum * a or (
                b * lden == lnum * a and basis[i] < basis[leave]
            ):
                leave, lnum, lden = i, b, a
        if leave < 0:
            raise Unbounded("entering column has no positive entries")
        pivot_row = tableau[leave]
        pivot = pivot_row[entering]
        for i in range(m + 1):
            if i == leave:
                continue
            row = tableau[i]
            f = row[entering]
            if f == 0:
                if pivot == denom:
                    continue
                for col in range(ncols + 1):
                    row[col] = row[col] * pivot // denom
            else:
                for col in range(ncols + 1):
                    row[col] = (row[col] * pivot - f * pivot_row[col]) // denom
        denom = pivot
        basis[leave] = entering

    values = [Fraction(0)] * ncols
    for i in range(m):
        values[basis[i]] = Fraction(tableau[i][rhs_col], denom)
    x = [values[j] - values[nv + j] for j in range(nv)]
    value = Fraction(zrow[rhs_col], denom * obj_scale)
    return value, x
