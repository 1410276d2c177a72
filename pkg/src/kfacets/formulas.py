"""Closed-form facet counts and bounds for neighborly and lifted families.

Binomials with a negative or undersized top argument evaluate to zero, which
keeps every formula valid across its whole k-range without special casing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import InputError


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def neighborly_e_k(n: int, d: int, k: int) -> int:
    """Oriented k-facet count of any neighborly polytope with n vertices in dim d."""
    if d < 1 or n <= d:
        raise InputError(f"need n > d >= 1, got n={n}, d={d}")
    if not 0 <= k <= n - d:
        raise InputError(f"k must be in 0..{n - d}, got {k}")
    if d % 2:
        half = (d + 1) // 2
        return 2 * binom(k + half - 1, half - 1) * binom(n - k - half, half - 1)
    half = d // 2
    return (binom(k + half - 1, half - 1) * binom(n - k - half, half)
            + binom(k + half, half) * binom(n - k - half - 1, half - 1))


def circle_count(n_points: int, k: int) -> int:
    """Oriented k-facet count of the circle lift of 2m + 1 generic planar points."""
    if n_points < 5 or n_points % 2 == 0:
        raise InputError(f"n_points must be odd and >= 5, got {n_points}")
    if not 0 <= k <= n_points - 3:
        raise InputError(f"k must be in 0..{n_points - 3}, got {k}")
    return 2 * (k + 1) * (n_points - k - 2)


def conic_count(n: int, k: int) -> int:
    """Oriented k-facet count of the degree-2 Veronese lift of n generic planar points."""
    if n < 6:
        raise InputError(f"need n >= 6, got {n}")
    if not 0 <= k <= n - 5:
        raise InputError(f"k must be in 0..{n - 5}, got {k}")
    return 2 * binom(k + 2, 2) * binom(n - k - 3, 2)


def homogeneous_count(n: int, m: int, k: int) -> int:
    """Oriented k-facet count of the degree-m homogeneous lift of n generic
    planar points, for even m (n is the total point count)."""
    if m < 2 or m % 2:
        raise InputError(f"m must be even and >= 2, got {m}")
    if n <= m + 1:
        raise InputError(f"need n > m + 1, got n={n}")
    if not 0 <= k <= n - m - 1:
        raise InputError(f"k must be in 0..{n - m - 1}, got {k}")
    half = m // 2
    return 2 * binom(k + half, half) * binom(n - k - half - 1, half)


def convex_3d_count(n: int, k: int) -> int:
    """Oriented k-facet count of n points in convex and general position in R^3."""
    if n < 4:
        raise InputError(f"need n >= 4, got {n}")
    if not 0 <= k <= n - 3:
        raise InputError(f"k must be in 0..{n - 3}, got {k}")
    return 2 * (k + 1) * n - 4 * binom(k + 2, 2)


def convex_bound(n: int, d: int, k: int, e_prev: Callable[[int, int], int]) -> int:
    """Ceiling of (n / d) * e_prev(n - 1, k): the recursive convex-position bound.

    ``e_prev`` supplies the (d-1)-dimensional count the caller wants to
    bound against (a maximum, a formula, or a measured value).
    """
    if d < 1 or n < 1:
        raise InputError("need n >= 1 and d >= 1")
    return math.ceil(Fraction(n, d) * e_prev(n - 1, k))


def m_neighborly_bound(n: int, d: int, m: int, k: int,
                       e_prev: Callable[[int, int], int]) -> int:
    """Ceiling of C(n, m) * e_prev(n - m, k) / C(d, m) for m-point deletion."""
    if not 1 <= m <= d:
        raise InputError(f"need 1 <= m <= d, got m={m}, d={d}")
    return math.ceil(Fraction(binom(n, m) * e_prev(n - m, k), binom(d, m)))


def perles_bounds(k: int, d: int) -> tuple[int, int]:
    """(lower, upper) bounds k(d+1) and 2k(k-1)d on the minimum dimension of a
    lift making every generic d-dimensional set k-neighborly."""
    if k < 2 or d < 1:
        raise InputError(f"need k >= 2 and d >= 1, got k={k}, d={d}")
    return k * (d + 1), 2 * k * (k - 1) * d


def generally_neighborly_dim(k: int, d: int) -> int:
    """Target dimension 2k + d - 1 of the explicit k-neighborly embedding."""
    if k < 1 or d < 1:
        raise InputError(f"need k >= 1 and d >= 1, got k={k}, d={d}")
    return 2 * k + d - 1


@dataclass(frozen=True)
class CountFormula:
    name: str
    params: tuple[str, ...]
    fn: Callable[..., int]


FORMULAS: dict[str, CountFormula] = {
    f.name: f
    for f in (
        CountFormula("neighborly-ek", ("n", "d", "k"), neighborly_e_k),
        CountFormula("circle", ("n", "k"), circle_count),
        CountFormula("conic", ("n", "k"), conic_count),
        CountFormula("homogeneous", ("n", "m", "k"), homogeneous_count),
        CountFormula("convex3d", ("n", "k"), convex_3d_count),
        CountFormula("embed-dim", ("k", "d"), generally_neighborly_dim),
    )
}
