"""Enumeration of k-facets and k-sets by exhaustive subset sweep.

The sweep clears denominators once (a positive per-axis scaling, which
changes no orientation, side, or separability predicate) so the inner loop
is pure integer arithmetic.  A worker count > 1 partitions the subset stream
into chunks executed in separate processes; results are merged in canonical
order, so the output never depends on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, gcd, lcm
from typing import Iterable, Iterator, Sequence

from .errors import DegeneracyError, InputError
from .facelab import separation_hyperplane
from .geometry import PointSet, _cross_normal, rank_int

IntPoint = tuple[int, ...]


@dataclass(frozen=True)
class OrientedFacet:
    """A spanning subset with a chosen side of its canonical hyperplane.

    ``sign`` +1 means the canonical (first-nonzero-positive, primitive
    integer normal) orientation; ``k`` is the number of points strictly on
    the chosen positive side.
    """

    indices: tuple[int, ...]
    sign: int
    k: int


@dataclass(frozen=True)
class KFacetProfile:
    n: int
    p: int
    e: tuple[int, ...]  # e[k] for k = 0 .. n - p

    def halving_level(self) -> int:
        if (self.n - self.p) % 2:
            raise InputError(
                f"no halving level: n - p = {self.n - self.p} is odd")
        return (self.n - self.p) // 2


@dataclass(frozen=True)
class KSetFamily:
    k: int
    sets: tuple[tuple[int, ...], ...]


def _scaled_int_points(ps: PointSet) -> list[IntPoint]:
    # positive per-axis scaling: a linear bijection, so every sidedness and
    # separability predicate of the original set is preserved
    mults = []
    for axis in range(ps.dim):
        mults.append(lcm(*(pt[axis].denominator for pt in ps.points)))
    return [tuple(int(c * m) for c, m in zip(pt, mults)) for pt in ps.points]


def _classify(pts: Sequence[IntPoint], subset: tuple[int, ...]) -> tuple[int, int]:
    """(positive, negative) counts against the canonical hyperplane of subset."""
    base = pts[subset[0]]
    rows = [[a - b for a, b in zip(pts[i], base)] for i in subset[1:]]
    normal = _cross_normal(rows)
    if not any(normal):
        raise DegeneracyError(
            f"degenerate facet candidate: points {subset} are affinely dependent",
            subset)
    g = gcd(*normal)
    normal = [v // g for v in normal]
    lead = next(v for v in normal if v)
    if lead < 0:
        normal = [-v for v in normal]
    offset = sum(a * b for a, b in zip(normal, base))
    pos = neg = on = 0
    extra = -1
    for i, pt in enumerate(pts):
        v = sum(a * b for a, b in zip(normal, pt)) - offset
        if v > 0:
            pos += 1
        elif v < 0:
            neg += 1
        else:
            on += 1
            if i not in subset:
                extra = i
    if on > len(subset):
        witness = tuple(sorted(subset + (extra,)))
        raise DegeneracyError(
            f"not in general linear position: points {witness} lie on one hyperplane",
            witness)
    return pos, neg


def _classify_chunk(args) -> list[tuple[tuple[int, ...], int, int]]:
    pts, subsets = args
    return [(s,) + _classify(pts, s) for s in subsets]


def _chunks(items: list, nchunks: int) -> list[list]:
    size = max(1, -(-len(items) // nchunks))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _sweep(ps: PointSet, workers: int | None) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """Yield (subset, positives, negatives) for every p-subset, in subset order."""
    n, p = ps.n, ps.dim
    if n < p:
        raise InputError(f"need at least dim = {p} points, got {n}")
    pts = _scaled_int_points(ps)
    subsets = list(combinations(range(n), p))
    if not workers or workers <= 1 or len(subsets) < 64:
        for s in subsets:
            yield (s,) + _classify(pts, s)
        return
    tasks = [(pts, chunk) for chunk in _chunks(subsets, workers * 4)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_classify_chunk, tasks):
            yield from part


def k_facet_profile(ps: PointSet, workers: int | None = None) -> KFacetProfile:
    """Counts e[k] of oriented k-facets for k = 0 .. n - p.

    Every spanning p-subset contributes both orientations, so sum(e) is
    2 * C(n, p).  Raises DegeneracyError on any general-position violation.
    """
    n, p = ps.n, ps.dim
    if n < p:
        raise InputError(f"need at least dim = {p} points, got {n}")
    e = [0] * (n - p + 1)
    for _, pos, neg in _sweep(ps, workers):
        e[pos] += 1
        e[neg] += 1
    return KFacetProfile(n=n, p=p, e=tuple(e))


def enumerate_k_facets(ps: PointSet, k: int, workers: int | None = None) -> list[OrientedFacet]:
    """All oriented facets with exactly k points strictly on the positive side."""
    n, p = ps.n, ps.dim
    if not 0 <= k <= n - p:
        raise InputError(f"k must be in 0..{n - p}, got {k}")
    out = []
    for subset, pos, neg in _sweep(ps, workers):
        if pos == k:
            out.append(OrientedFacet(indices=subset, sign=1, k=k))
        if neg == k:
            out.append(OrientedFacet(indices=subset, sign=-1, k=k))
    return out


def count_unoriented_halving(ps: PointSet, workers: int | None = None) -> int:
    """Number of unoriented halving facets; needs n - p even."""
    profile = k_facet_profile(ps, workers)
    level = profile.halving_level()
    count = profile.e[level]
    # a facet halves iff both its orientations sit at the halving level
    return count // 2


def _separable_chunk(args) -> list[tuple[tuple[int, ...], bool]]:
    dim, rows, candidates = args
    ps = PointSet(dim, tuple(tuple(Fraction(c) for c in r) for r in rows))
    return [(s, separation_hyperplane(ps, s) is not None) for s in candidates]


def enumerate_k_sets(ps: PointSet, k: int, workers: int | None = None) -> KSetFamily:
    """All k-subsets strictly separable from their complement by a hyperplane.

    Candidates come from sweeping hyperplanes through spanning p-subsets and
    combining each side's strict points with boundary subsets; every
    candidate is confirmed by the margin LP.  General linear position is not
    required.
    """
    n, p = ps.n, ps.dim
    if not 1 <= k <= n - 1:
        raise InputError(f"k must be in 1..{n - 1}, got {k}")
    pts = _scaled_int_points(ps)
    base = pts[0]
    rank = rank_int([[a - b for a, b in zip(pt, base)] for pt in pts[1:]])

    candidates: set[tuple[int, ...]] = set()
    if rank < p:
        # the whole set lies in a hyperplane: every k-subset is a boundary
        # combination of such a hyperplane, so all of them are candidates
        candidates.update(combinations(range(n), k))
    else:
        for subset in combinations(range(n), p):
            rows = [[a - b for a, b in zip(pts[i], pts[subset[0]])]
                    for i in subset[1:]]
            normal = _cross_normal(rows)
            if not any(normal):
                continue
            offset = sum(a * b for a, b in zip(normal, pts[subset[0]]))
            pos_idx, neg_idx, on_idx = [], [], []
            for i, pt in enumerate(pts):
                v = sum(a * b for a, b in zip(normal, pt)) - offset
                (pos_idx if v > 0 else neg_idx if v < 0 else on_idx).append(i)
            for strict_side in (pos_idx, neg_idx):
                need = k - len(strict_side)
                if 0 <= need <= len(on_idx):
                    for extra in combinations(on_idx, need):
                        candidates.add(tuple(sorted(strict_side + list(extra))))

    ordered = sorted(candidates)
    scaled_rows = [tuple(pt) for pt in pts]
    if not workers or workers <= 1 or len(ordered) < 32:
        lifted = PointSet(p, tuple(tuple(Fraction(c) for c in r) for r in scaled_rows))
        verdicts = [(s, separation_hyperplane(lifted, s) is not None) for s in ordered]
    else:
        tasks = [(p, scaled_rows, chunk) for chunk in _chunks(ordered, workers * 4)]
        verdicts = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_separable_chunk, tasks):
                verdicts.extend(part)
    return KSetFamily(k=k, sets=tuple(s for s, ok in verdicts if ok))


def k_set_counts(ps: PointSet, workers: int | None = None) -> tuple[int, ...]:
    """a[k] = number of k-sets, for k = 1 .. n - 1."""
    return tuple(
        len(enumerate_k_sets(ps, k, workers).sets) for k in range(1, ps.n))
