"""Seeded generation of point sets in various genericity classes.

All generators draw integer coordinates from ``random.Random(seed)`` and
reject wholesale until the requested predicate holds, so a (seed, shape)
pair always reproduces the same set, bit for bit.
"""

from __future__ import annotations

import random

from .errors import GenerationError, InputError
from .facelab import face_certificate
from .geometry import PointSet, is_general_linear_position, point_set
from .liftmaps import MonomialMap, circle_map, homogeneous_veronese, moment_curve, veronese

DEFAULT_RETRIES = 200


def random_point_set(n: int, d: int, seed: int, coord_bound: int | None = None,
                     max_retries: int = DEFAULT_RETRIES) -> PointSet:
    """Uniform integer coordinates in [-coord_bound, coord_bound], retried
    until the set is in general linear position."""
    if n < 1 or d < 1:
        raise InputError(f"need n >= 1 and d >= 1, got n={n}, d={d}")
    bound = coord_bound if coord_bound is not None else max(2 * n * d, 16)
    if bound < n * d:
        raise InputError(f"coord_bound must be >= n * d = {n * d}, got {bound}")
    rng = random.Random(seed)
    for _ in range(max_retries):
        rows = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(n)]
        ps = point_set(rows)
        if is_general_linear_position(ps):
            return ps
    raise GenerationError(
        f"no GLP set of {n} points in dim {d} within {max_retries} tries (seed {seed})")


def map_generic_set(n: int, mmap: MonomialMap, seed: int,
                    coord_bound: int | None = None,
                    require_source_glp: bool = True,
                    no_common_origin_line: bool = False,
                    max_retries: int = DEFAULT_RETRIES) -> PointSet:
    """A seeded integer set whose image under ``mmap`` is in general linear
    position, optionally also requiring source GLP or pairwise distinct
    lines through the origin."""
    d = mmap.source_dim
    if n < 1:
        raise InputError(f"need n >= 1, got {n}")
    bound = coord_bound if coord_bound is not None else max(2 * n * d, 16)
    rng = random.Random(seed)
    for _ in range(max_retries):
        rows = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(n)]
        ps = point_set(rows)
        if no_common_origin_line and not _origin_lines_distinct(ps):
            continue
        if require_source_glp and not is_general_linear_position(ps):
            continue
        if is_general_linear_position(mmap.apply(ps)):
            return ps
    raise GenerationError(
        f"no admissible set of {n} points within {max_retries} tries (seed {seed})")


def _origin_lines_distinct(ps: PointSet) -> bool:
    if ps.dim != 2:
        raise InputError("origin-line check is for planar sets")
    pts = ps.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i][0] * pts[j][1] == pts[i][1] * pts[j][0]:
                return False
    return True


def check_conic_general_position(ps: PointSet) -> bool:
    """GLP of both the planar set and its degree-2 Veronese lift."""
    if ps.dim != 2:
        raise InputError("conic genericity is for planar sets")
    return (is_general_linear_position(ps)
            and is_general_linear_position(veronese(2, 2).apply(ps)))


def check_homogeneous_general_position(ps: PointSet, m: int) -> bool:
    """No two points on a common line through the origin, and the degree-m
    homogeneous lift in general linear position."""
    if m < 2 or m % 2:
        raise InputError(f"m must be even and >= 2, got {m}")
    return (_origin_lines_distinct(ps)
            and is_general_linear_position(homogeneous_veronese(2, m).apply(ps)))


def check_circle_general_position(ps: PointSet) -> bool:
    """GLP of both the planar set and its circle lift (no four concyclic)."""
    if ps.dim != 2:
        raise InputError("circle genericity is for planar sets")
    return (is_general_linear_position(ps)
            and is_general_linear_position(circle_map().apply(ps)))


def check_distinct_first_coordinate(ps: PointSet) -> bool:
    firsts = [pt[0] for pt in ps.points]
    return len(set(firsts)) == len(firsts)


def distinct_first_coordinate_set(n: int, d: int, seed: int,
                                  coord_bound: int | None = None,
                                  max_retries: int = DEFAULT_RETRIES) -> PointSet:
    """GLP set with pairwise distinct first coordinates."""
    rng = random.Random(seed)
    bound = coord_bound if coord_bound is not None else max(2 * n * d, 16)
    for _ in range(max_retries):
        rows = [[rng.randint(-bound, bound) for _ in range(d)] for _ in range(n)]
        ps = point_set(rows)
        if check_distinct_first_coordinate(ps) and is_general_linear_position(ps):
            return ps
    raise GenerationError(
        f"no distinct-x1 GLP set of {n} points within {max_retries} tries (seed {seed})")


def convex_position_set(n: int, d: int, seed: int) -> PointSet:
    """n points in convex and general position in dim d, built on the moment
    curve with seeded distinct integer parameters and certified afterwards:
    the set must be GLP and every singleton a strict face."""
    if d < 1 or n <= d:
        raise InputError(f"need n > d >= 1, got n={n}, d={d}")
    rng = random.Random(seed)
    params = sorted(rng.sample(range(-3 * n, 3 * n + 1), n))
    ps = moment_curve(d).apply(point_set([[t] for t in params]))
    if not is_general_linear_position(ps):
        raise GenerationError("moment-curve set unexpectedly degenerate")
    for i in range(n):
        if face_certificate(ps, (i,), strict=True) is None:
            raise GenerationError(f"point {i} is not a vertex; seed {seed}")
    return ps


def generate(mode: str, n: int, d: int, seed: int,
             coord_bound: int | None = None) -> PointSet:
    """CLI entry: mode is one of glp, conic, hom:<m>, convex, distinct-x1."""
    if mode == "glp":
        return random_point_set(n, d, seed, coord_bound)
    if mode == "conic":
        if d != 2:
            raise InputError("conic mode needs d = 2")
        return map_generic_set(n, veronese(2, 2), seed, coord_bound)
    if mode.startswith("hom:"):
        if d != 2:
            raise InputError("hom mode needs d = 2")
        m = int(mode.split(":", 1)[1])
        if m < 2 or m % 2:
            raise InputError(f"m must be even and >= 2, got {m}")
        return map_generic_set(n, homogeneous_veronese(2, m), seed, coord_bound,
                               require_source_glp=False, no_common_origin_line=True)
    if mode == "convex":
        return convex_position_set(n, d, seed)
    if mode == "distinct-x1":
        return distinct_first_coordinate_set(n, d, seed, coord_bound)
    raise InputError(f"unknown generation mode {mode!r}")
