"""Exact affine geometry over the rationals.

Coordinates are ``fractions.Fraction`` throughout; every predicate here is
decided by integer sign computations after clearing denominators, so there is
no floating point anywhere in a decision path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DegeneracyError, InputError

Point = tuple[Fraction, ...]


def rational(value) -> Fraction:
    """Parse a scalar as an exact rational.

    Accepts ints, Fractions, and strings in the forms ``"3"``, ``"-3/4"``
    and ``"0.25"`` (decimals are exact, never binary-float approximations).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"cannot parse rational from {value!r}") from exc
    if isinstance(value, float):
        raise InputError(
            f"refusing float {value!r}: pass a string or Fraction for exactness"
        )
    raise InputError(f"cannot parse rational from {value!r}")


def format_rational(value: Fraction) -> str:
    return str(value)


@dataclass(frozen=True)
class PointSet:
    """An ordered list of labelled points sharing one ambient dimension."""

    dim: int
    points: tuple[Point, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.dim < 1:
            raise InputError(f"dim must be >= 1, got {self.dim}")
        for pt in self.points:
            if len(pt) != self.dim:
                raise InputError(
                    f"point {pt} has {len(pt)} coordinates, expected {self.dim}"
                )
        if self.labels is not None and len(self.labels) != len(self.points):
            raise InputError("labels must match points one to one")

    @property
    def n(self) -> int:
        return len(self.points)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def subset(self, indices: Iterable[int]) -> tuple[Point, ...]:
        return tuple(self.points[i] for i in indices)


def point_set(rows: Sequence[Sequence], labels: Sequence[str] | None = None) -> PointSet:
    """Build a PointSet, coercing every coordinate through ``rational``."""
    pts = tuple(tuple(rational(c) for c in row) for row in rows)
    if not pts:
        raise InputError("point set needs at least one point")
    return PointSet(dim=len(pts[0]), points=pts,
                    labels=tuple(labels) if labels is not None else None)


@dataclass(frozen=True)
class Hyperplane:
    """Oriented hyperplane ``normal . x = offset``; positive side is ``> offset``."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        if all(c == 0 for c in self.normal):
            raise InputError("hyperplane normal must be nonzero")

    def eval(self, point: Sequence[Fraction]) -> Fraction:
        return sum(a * x for a, x in zip(self.normal, point)) - self.offset

    def side(self, point: Sequence[Fraction]) -> int:
        v = self.eval(point)
        return (v > 0) - (v < 0)

    def flip(self) -> "Hyperplane":
        return Hyperplane(tuple(-a for a in self.normal), -self.offset)

    def scaled_primitive(self) -> "Hyperplane":
        """Scale by a positive rational so entries are coprime integers."""
        nums = list(self.normal) + [self.offset]
        mult = lcm(*(f.denominator for f in nums))
        ints = [int(f * mult) for f in nums]
        g = gcd(*ints)
        if g:
            ints = [v // g for v in ints]
        return Hyperplane(tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1]))

    def canonical(self) -> "Hyperplane":
        """Primitive integer form with the first nonzero normal entry positive."""
        h = self.scaled_primitive()
        lead = next(c for c in h.normal if c != 0)
        return h.flip() if lead < 0 else h


# --- integer linear algebra -------------------------------------------------

def _int_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    # per-row positive scaling: preserves determinant sign and row space
    out = []
    for row in rows:
        mult = lcm(*(f.denominator for f in row)) if row else 1
        out.append([int(f * mult) for f in row])
    return out


def det_int(rows: list[list[int]]) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [row[:] for row in rows]
    sign = 1
    prev = 1
    for j in range(n - 1):
        if m[j][j] == 0:
            for i in range(j + 1, n):
                if m[i][j] != 0:
                    m[i], m[j] = m[j], m[i]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[j][j]
        for i in range(j + 1, n):
            mi, mj = m[i], m[j]
            f = mi[j]
            for col in range(j + 1, n):
                mi[col] = (mi[col] * pivot - f * mj[col]) // prev
            mi[j] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank_int(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    m = [row[:] for row in rows if any(row)]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    prev = 1
    for j in range(cols):
        pivot_row = next((i for i in range(rank, len(m)) if m[i][j] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        pivot = m[rank][j]
        for i in range(rank + 1, len(m)):
            mi, mr = m[i], m[rank]
            f = mi[j]
            for col in range(j, cols):
                mi[col] = (mi[col] * pivot - f * mr[col]) // prev
        prev = pivot
        rank += 1
        if rank == len(m):
            break
    return rank


def _diff_rows(pts: Sequence[Point]) -> list[list[Fraction]]:
    base = pts[0]
    return [[x - b for x, b in zip(p, base)] for p in pts[1:]]


def orientation(pts: Sequence[Point]) -> int:
    """Sign of det of the matrix with rows pts[i] - pts[0], i = 1..dim.

    Requires exactly dim + 1 points; 0 means the points are affinely dependent.
    """
    dim = len(pts[0])
    if len(pts) != dim + 1:
        raise InputError(f"orientation in dim {dim} needs {dim + 1} points, got {len(pts)}")
    d = det_int(_int_rows(_diff_rows(pts)))
    return (d > 0) - (d < 0)


def affinely_independent(pts: Sequence[Point]) -> bool:
    if len(pts) <= 1:
        return True
    rows = _int_rows(_diff_rows(pts))
    return rank_int(rows) == len(pts) - 1


def violating_subset(ps: PointSet) -> tuple[int, ...] | None:
    """A smallest witness that ps is not in general linear position, or None."""
    n, p = ps.n, ps.dim
    if n <= p:
        if affinely_independent(ps.points):
            return None
        # shrink to a minimal affinely dependent subset
        for size in range(2, n + 1):
            for idx in combinations(range(n), size):
                if not affinely_independent(ps.subset(idx)):
                    return idx
        return tuple(range(n))
    for idx in combinations(range(n), p + 1):
        if orientation(ps.subset(idx)) == 0:
            return idx
    return None


def is_general_linear_position(ps: PointSet) -> bool:
    """True iff no dim + 1 points of ps are affinely dependent.

    For n <= dim this degenerates to affine independence of all points.
    """
    return violating_subset(ps) is None


def hyperplane_through(pts: Sequence[Point]) -> Hyperplane:
    """The canonical hyperplane through dim affinely independent points.

    The normal is the generalized cross product of the difference vectors,
    reduced to coprime integers with the first nonzero entry positive.
    """
    dim = len(pts[0])
    if len(pts) != dim:
        raise InputError(f"need exactly {dim} points in dim {dim}, got {len(pts)}")
    rows = _int_rows(_diff_rows(pts))
    normal = _cross_normal(rows)
    if all(v == 0 for v in normal):
        raise DegeneracyError("points are affinely dependent", tuple(range(len(pts))))
    g = gcd(*normal)
    normal = [v // g for v in normal]
    lead = next(v for v in normal if v != 0)
    if lead < 0:
        normal = [-v for v in normal]
    offset = sum(Fraction(a) * x for a, x in zip(normal, pts[0]))
    return Hyperplane(tuple(Fraction(v) for v in normal), offset)


def _cross_normal(rows: list[list[int]]) -> list[int]:
    # Laplace expansion of det([x; rows]) along the symbolic first row x
    dim = len(rows) + 1
    out = []
    for j in range(dim):
        minor = [r[:j] + r[j + 1:] for r in rows]
        out.append((-1) ** j * det_int(minor))
    return out


def side_counts(h: Hyperplane, ps: PointSet) -> tuple[int, int, int]:
    """(strictly positive, strictly negative, on) counts of ps against h."""
    pos = neg = on = 0
    for pt in ps.points:
        s = h.side(pt)
        if s > 0:
            pos += 1
        elif s < 0:
            neg += 1
        else:
            on += 1
    return pos, neg, on
