"""Shared independent oracles for the test suite.

These deliberately avoid the package's own linear algebra: determinants are
permutation sums, sides are raw Fraction arithmetic, so they can confirm the
fast paths without sharing code with them.
"""

from fractions import Fraction
from itertools import combinations, permutations

from kfacets.facelab import separation_hyperplane
from kfacets.geometry import PointSet


def det_perm(matrix) -> Fraction:
    """Determinant by the permutation-sum definition (small matrices only)."""
    n = len(matrix)
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        for i in range(n):
            for j in range(i + 1, n):
                if seen[i] > seen[j]:
                    sign = -sign
        term = Fraction(1)
        for i in range(n):
            term *= matrix[i][perm[i]]
        total += sign * term
    return total


def orientation_oracle(pts) -> int:
    base = pts[0]
    rows = [[x - b for x, b in zip(p, base)] for p in pts[1:]]
    d = det_perm(rows)
    return (d > 0) - (d < 0)


def profile_oracle(ps: PointSet) -> tuple[int, ...]:
    """k-facet profile by brute-force sign counting, independent of the engine.

    For each spanning subset the unordered pair of side counts is recorded;
    degenerate configurations raise ValueError.
    """
    n, p = ps.n, ps.dim
    e = [0] * (n - p + 1)
    for subset in combinations(range(n), p):
        base = ps.points[subset[0]]
        rows = [[x - b for x, b in zip(ps.points[i], base)] for i in subset[1:]]
        pos = neg = on = 0
        for j in range(n):
            if j in subset:
                continue
            mat = rows + [[x - b for x, b in zip(ps.points[j], base)]]
            d = det_perm(mat)
            if d > 0:
                pos += 1
            elif d < 0:
                neg += 1
            else:
                on += 1
        if on or not any(any(r) for r in rows):
            raise ValueError(f"degenerate subset {subset}")
        e[pos] += 1
        e[neg] += 1
    return tuple(e)


def k_sets_oracle(ps: PointSet, k: int) -> tuple[tuple[int, ...], ...]:
    """Every k-subset, kept iff the margin LP strictly separates it."""
    out = []
    for subset in combinations(range(ps.n), k):
        if separation_hyperplane(ps, subset) is not None:
            out.append(subset)
    return tuple(out)
