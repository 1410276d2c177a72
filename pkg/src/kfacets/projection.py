"""Stereographic projection from a vertex, preserving per-vertex facet counts.

Projecting the remaining points from a vertex v onto a hyperplane parallel
to a strict supporting hyperplane at v puts the k-facets of the image in
bijection with the k-facets of the original set through v.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegeneracyError, InputError
from .facelab import face_certificate
from .facets import _sweep
from .geometry import PointSet, is_general_linear_position, violating_subset


def stereographic_project(ps: PointSet, v: int, workers: int | None = None) -> PointSet:
    """Project every point but ps[v] from ps[v] onto a far parallel chart.

    Needs ps[v] to be a vertex (a strict supporting hyperplane exists; found
    by LP).  The image is returned in dim - 1 coordinates by dropping the
    axis with the largest absolute normal entry, an affine chart of the
    image hyperplane.  The image of a GLP set is GLP again; violated only
    if the input was degenerate, which raises DegeneracyError.
    """
    if not 0 <= v < ps.n:
        raise InputError(f"vertex index {v} out of range")
    cert = face_certificate(ps, (v,), strict=True)
    if cert is None:
        raise InputError(f"point {v} is not a vertex of the convex hull")
    h = cert.hyperplane
    pole = ps.points[v]
    # parallel hyperplane strictly beyond every point of the set
    far = max(sum(a * x for a, x in zip(h.normal, pt)) for pt in ps.points) + 1
    base = sum(a * x for a, x in zip(h.normal, pole))
    drop = max(range(ps.dim), key=lambda i: abs(h.normal[i]))
    image = []
    labels = []
    for i, pt in enumerate(ps.points):
        if i == v:
            continue
        level = sum(a * x for a, x in zip(h.normal, pt))
        tau = Fraction(far - base, level - base)
        proj = tuple(p + tau * (x - p) for p, x in zip(pole, pt))
        image.append(proj[:drop] + proj[drop + 1:])
        labels.append(ps.label(i))
    out = PointSet(dim=ps.dim - 1, points=tuple(image), labels=tuple(labels))
    witness = violating_subset(out)
    if witness is not None:
        raise DegeneracyError(
            f"projected set degenerate at image points {witness}; "
            "the input violates general linear position", witness)
    return out


def facets_through_vertex(ps: PointSet, v: int, k: int, workers: int | None = None) -> int:
    """Number of oriented k-facets of ps whose spanning subset contains v."""
    if not 0 <= v < ps.n:
        raise InputError(f"vertex index {v} out of range")
    if not 0 <= k <= ps.n - ps.dim:
        raise InputError(f"k must be in 0..{ps.n - ps.dim}, got {k}")
    count = 0
    for subset, pos, neg in _sweep(ps, workers):
        if v in subset:
            count += (pos == k) + (neg == k)
    return count
