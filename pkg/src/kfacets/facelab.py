"""Face certificates, separation oracles, and Radon partitions.

Strict face queries are margin-maximization LPs: maximize t subject to
a.x = b on the candidate face, a.s <= b - t off it, normalized by
-1 <= a_i <= 1; a strict certificate exists iff the optimum is positive.
Non-strict (weak) certificates additionally need a nonzero normal, obtained
by maximizing +-a_i under the same box until one coordinate comes out
nonzero.  Returned certificates always re-verify by direct substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import DegeneracyError, InputError
from .geometry import Hyperplane, Point, PointSet, violating_subset
from .simplex import maximize

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class FaceCertificate:
    """Hyperplane containing a subset with all other points on the positive side."""

    hyperplane: Hyperplane
    strict: bool

    def validate(self, ps: PointSet, subset: Sequence[int]) -> bool:
        """Exact substitution check against the set the certificate is for."""
        chosen = set(subset)
        for i, pt in enumerate(ps.points):
            v = self.hyperplane.eval(pt)
            if i in chosen:
                if v != 0:
                    return False
            elif v < 0 or (self.strict and v == 0):
                return False
        return True


@dataclass(frozen=True)
class RadonWitness:
    """Partition (Q, R) of a (dim+2)-point set with intersecting hulls.

    ``lambdas`` holds, per point, its convex coefficient within its own part;
    both parts' combinations equal ``common_point``.
    """

    part_q: tuple[int, ...]
    part_r: tuple[int, ...]
    lambdas: tuple[Fraction, ...]
    common_point: Point

    def validate(self, ps: PointSet) -> bool:
        if sorted(self.part_q + self.part_r) != list(range(ps.n)):
            return False
        for part in (self.part_q, self.part_r):
            if sum(self.lambdas[i] for i in part) != 1:
                return False
            if any(self.lambdas[i] <= 0 for i in part):
                return False
            mix = [ZERO] * ps.dim
            for i in part:
                for axis, c in enumerate(ps.points[i]):
                    mix[axis] += self.lambdas[i] * c
            if tuple(mix) != self.common_point:
                return False
        return True


def _check_subset(ps: PointSet, subset: Sequence[int]) -> tuple[int, ...]:
    idx = tuple(subset)
    if len(set(idx)) != len(idx):
        raise InputError(f"subset has repeated indices: {idx}")
    if any(i < 0 or i >= ps.n for i in idx):
        raise InputError(f"subset {idx} out of range for n={ps.n}")
    return idx


def _box_rows(p: int, extra: int) -> list[tuple[list[Fraction], Fraction]]:
    rows = []
    for l in range(p):
        e = [ZERO] * (p + extra)
        e[l] = ONE
        rows.append((e, ONE))
        rows.append(([-c for c in e], ONE))
    return rows


def _on_rows(pt: Point, extra: int) -> list[tuple[list[Fraction], Fraction]]:
    # a.x - b = 0 as a pair of inequalities; trailing columns stay zero
    row = list(pt) + [-ONE] + [ZERO] * (extra - 1)
    return [(row, ZERO), ([-c for c in row], ZERO)]


def face_certificate(ps: PointSet, subset: Sequence[int], strict: bool = True) -> FaceCertificate | None:
    """Certificate that ``subset`` is a (strict) face of ps, or None.

    Strict means every point off the subset lies strictly on the positive
    side of the returned hyperplane; weak allows touching.
    """
    idx = _check_subset(ps, subset)
    if not idx:
        raise InputError("face subset must be nonempty")
    if strict and len(idx) == ps.n:
        raise InputError("strict face must exclude at least one point")
    p = ps.dim
    chosen = set(idx)
    if strict:
        rows = []
        for i in idx:
            rows.extend(_on_rows(ps.points[i], 2))
        for j in range(ps.n):
            if j not in chosen:
                rows.append((list(ps.points[j]) + [-ONE, ONE], ZERO))
        rows.extend(_box_rows(p, 2))
        objective = [ZERO] * (p + 2)
        objective[p + 1] = ONE
        value, x = maximize(objective, rows)
        if value <= 0:
            return None
        return _packaged(ps, idx, x[:p], x[p], strict=True)

    rows = []
    for i in idx:
        rows.extend(_on_rows(ps.points[i], 1))
    for j in range(ps.n):
        if j not in chosen:
            rows.append((list(ps.points[j]) + [-ONE], ZERO))
    rows.extend(_box_rows(p, 1))
    for l in range(p):
        for sigma in (ONE, -ONE):
            objective = [ZERO] * (p + 1)
            objective[l] = sigma
            value, x = maximize(objective, rows)
            if value > 0:
                return _packaged(ps, idx, x[:p], x[p], strict=False)
    return None


def _packaged(ps: PointSet, idx: tuple[int, ...], a: list[Fraction], b: Fraction,
              strict: bool) -> FaceCertificate:
    h = Hyperplane(tuple(-c for c in a), -b).scaled_primitive()
    cert = FaceCertificate(hyperplane=h, strict=strict)
    if not cert.validate(ps, idx):
        raise RuntimeError("internal error: LP certificate failed substitution")
    return cert


def separation_hyperplane(ps: PointSet, subset: Sequence[int]) -> Hyperplane | None:
    """Hyperplane with ``subset`` strictly positive and the rest strictly
    negative, or None if no such hyperplane exists."""
    idx = _check_subset(ps, subset)
    if not 0 < len(idx) < ps.n:
        raise InputError("separation needs a nonempty proper subset")
    p = ps.dim
    chosen = set(idx)
    rows = []
    for i in idx:
        rows.append(([-c for c in ps.points[i]] + [ONE, ONE], ZERO))
    for j in range(ps.n):
        if j not in chosen:
            rows.append((list(ps.points[j]) + [-ONE, ONE], ZERO))
    rows.extend(_box_rows(p, 2))
    objective = [ZERO] * (p + 2)
    objective[p + 1] = ONE
    value, x = maximize(objective, rows)
    if value <= 0:
        return None
    h = Hyperplane(tuple(x[:p]), x[p]).scaled_primitive()
    for i in range(ps.n):
        s = h.side(ps.points[i])
        ok = s > 0 if i in chosen else s < 0
        if not ok:
            raise RuntimeError("internal error: separation witness failed substitution")
    return h


def strictly_separable(ps: PointSet, subset: Sequence[int]) -> bool:
    return separation_hyperplane(ps, subset) is not None


def neighborliness_degree(ps: PointSet, max_k: int) -> int:
    """Largest k <= max_k with every subset of size <= k a strict face.

    Returns 0 as soon as some single point is not a vertex.
    """
    if not 1 <= max_k <= ps.n - 1:
        raise InputError(f"max_k must be in 1..{ps.n - 1}, got {max_k}")
    for size in range(1, max_k + 1):
        for subset in combinations(range(ps.n), size):
            if face_certificate(ps, subset, strict=True) is None:
                return size - 1
    return max_k


def is_weakly_k_neighborly(ps: PointSet, k: int) -> tuple[bool, tuple[int, ...] | None]:
    """Whether every k-subset admits a weak face certificate.

    On failure returns (False, first failing subset in lexicographic order).
    """
    if not 1 <= k <= ps.n:
        raise InputError(f"k must be in 1..{ps.n}, got {k}")
    for subset in combinations(range(ps.n), k):
        if face_certificate(ps, subset, strict=False) is None:
            return False, subset
    return True, None


# --- constructive certificates ----------------------------------------------

def conic_edge_certificate(v1: Point, v2: Point) -> FaceCertificate:
    """Strict face certificate for a planar pair under the degree-2 Veronese.

    Squaring the line a x + b y - c = 0 through the pair gives a polynomial
    vanishing exactly there and positive elsewhere; its coefficients in the
    Veronese coordinates (x, y, x^2, xy, y^2) are the hyperplane normal.
    """
    if len(v1) != 2 or len(v2) != 2:
        raise InputError("conic edge certificate needs planar points")
    if v1 == v2:
        raise InputError("points must be distinct")
    a = v1[1] - v2[1]
    b = v2[0] - v1[0]
    c = a * v1[0] + b * v1[1]
    normal = (-2 * a * c, -2 * b * c, a * a, 2 * a * b, b * b)
    h = Hyperplane(normal, -c * c).scaled_primitive()
    return FaceCertificate(hyperplane=h, strict=True)


def embedding_face_certificate(src: PointSet, subset: Sequence[int], k: int) -> FaceCertificate:
    """Strict face certificate for a subset of size <= k under neighborly_embedding(k, d).

    The witness is the polynomial prod (x1 - v_1)^2 over the subset, read off
    as a hyperplane in the lifted coordinates (x1, ..., x1^2k, x2, ..., xd).
    Validity against the lifted set requires distinct first coordinates.
    """
    idx = _check_subset(src, subset)
    if not idx:
        raise InputError("face subset must be nonempty")
    if len(idx) > k:
        raise InputError(f"subset size {len(idx)} exceeds k={k}")
    coeffs = [ONE]
    for i in idx:
        root = src.points[i][0]
        for _ in range(2):
            shifted = [ZERO] + coeffs
            coeffs = [s - root * c for s, c in
                      zip(shifted, coeffs + [ZERO])]
    target = 2 * k + src.dim - 1
    normal = [ZERO] * target
    for power in range(1, len(coeffs)):
        normal[power - 1] = coeffs[power]
    h = Hyperplane(tuple(normal), -coeffs[0]).scaled_primitive()
    return FaceCertificate(hyperplane=h, strict=True)


# --- Radon partitions and weak separation ------------------------------------

def _affine_kernel(ps: PointSet) -> list[Fraction]:
    """One nonzero vector lam with sum lam_i x_i = 0 and sum lam_i = 0.

    Requires n = dim + 2 points affinely spanning; raises DegeneracyError if
    the kernel is not one-dimensional.
    """
    n = ps.n
    rows = [[ps.points[i][axis] for i in range(n)] for axis in range(ps.dim)]
    rows.append([ONE] * n)
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        rows[r] = [c / pv for c in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [c - f * pc for c, pc in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        witness = violating_subset(ps)
        raise DegeneracyError(
            f"points are not in general linear position: {witness}",
            witness or tuple(range(n)),
        )
    lam = [ZERO] * n
    lam[free[0]] = ONE
    for row_idx, col in enumerate(pivots):
        lam[col] = -rows[row_idx][free[0]]
    return lam


def radon_partition(ps: PointSet) -> RadonWitness:
    """Radon partition of dim + 2 points in general linear position.

    The affine dependence splits by coefficient sign; normalizing each side
    to total weight one makes both convex combinations meet in one point.
    """
    if ps.n != ps.dim + 2:
        raise InputError(f"radon needs exactly dim + 2 = {ps.dim + 2} points, got {ps.n}")
    lam = _affine_kernel(ps)
    if any(v == 0 for v in lam):
        witness = tuple(i for i in range(ps.n) if lam[i] != 0)
        raise DegeneracyError(
            f"points are not in general linear position: {witness}", witness)
    part_q = tuple(i for i in range(ps.n) if lam[i] > 0)
    part_r = tuple(i for i in range(ps.n) if lam[i] < 0)
    total = sum(lam[i] for i in part_q)
    weights = [v / total if v > 0 else -v / total for v in lam]
    common = [ZERO] * ps.dim
    for i in part_q:
        for axis, c in enumerate(ps.points[i]):
            common[axis] += weights[i] * c
    witness = RadonWitness(
        part_q=part_q,
        part_r=part_r,
        lambdas=tuple(weights),
        common_point=tuple(common),
    )
    if not witness.validate(ps):
        raise RuntimeError("internal error: radon witness failed validation")
    return witness


def weak_separation(q: PointSet, r: PointSet) -> Hyperplane | None:
    """Nonzero hyperplane with q on its <= side and r on its >= side, or None."""
    if q.dim != r.dim:
        raise InputError("point sets must share ambient dimension")
    p = q.dim
    rows = []
    for pt in q.points:
        rows.append((list(pt) + [-ONE], ZERO))
    for pt in r.points:
        rows.append(([-c for c in pt] + [ONE], ZERO))
    rows.extend(_box_rows(p, 1))
    for l in range(p):
        for sigma in (ONE, -ONE):
            objective = [ZERO] * (p + 1)
            objective[l] = sigma
            value, x = maximize(objective, rows)
            if value > 0:
                h = Hyperplane(tuple(x[:p]), x[p]).scaled_primitive()
                if any(h.side(pt) > 0 for pt in q.points) or any(
                        h.side(pt) < 0 for pt in r.points):
                    raise RuntimeError("internal error: separation failed substitution")
                return h
    return None
