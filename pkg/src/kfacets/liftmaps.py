"""Polynomial lifting maps with integer-linear-combination coordinates.

A map sends R^d -> R^p coordinate-wise; each output coordinate is an integer
linear combination of monomials in the source variables.  Pure monomial maps
(every coordinate one monomial with coefficient 1) cover the Veronese family;
the sum-of-squares coordinate of the circle map needs the general form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import InputError
from .geometry import Point, PointSet

Term = tuple[int, tuple[int, ...]]  # (coefficient, exponent vector)


@dataclass(frozen=True)
class MonomialMap:
    source_dim: int
    coords: tuple[tuple[Term, ...], ...]

    def __post_init__(self):
        if self.source_dim < 1:
            raise InputError("source_dim must be >= 1")
        if not self.coords:
            raise InputError("map needs at least one output coordinate")
        for terms in self.coords:
            if not terms:
                raise InputError("empty coordinate polynomial")
            for coef, exps in terms:
                if len(exps) != self.source_dim:
                    raise InputError(f"exponent vector {exps} has wrong arity")
                if coef == 0:
                    raise InputError("zero coefficient term")
                if all(e == 0 for e in exps):
                    raise InputError("constant terms are not allowed")
                if any(e < 0 for e in exps):
                    raise InputError("negative exponent")

    @property
    def target_dim(self) -> int:
        return len(self.coords)

    @property
    def exponents(self) -> tuple[tuple[int, ...], ...]:
        """Exponent vectors of a pure monomial map (coefficient-1 singletons)."""
        out = []
        for terms in self.coords:
            if len(terms) != 1 or terms[0][0] != 1:
                raise InputError("map is not a pure monomial map")
            out.append(terms[0][1])
        return tuple(out)

    def evaluate(self, point: Point) -> Point:
        if len(point) != self.source_dim:
            raise InputError(
                f"point has dim {len(point)}, map expects {self.source_dim}"
            )
        out = []
        for terms in self.coords:
            acc = Fraction(0)
            for coef, exps in terms:
                v = Fraction(coef)
                for x, e in zip(point, exps):
                    if e:
                        v *= x ** e
                acc += v
            out.append(acc)
        return tuple(out)

    def apply(self, ps: PointSet) -> PointSet:
        """Lift every point, preserving order and labels."""
        return PointSet(
            dim=self.target_dim,
            points=tuple(self.evaluate(p) for p in ps.points),
            labels=ps.labels,
        )


def _monomial(exps: tuple[int, ...]) -> tuple[Term, ...]:
    return ((1, exps),)


def _degree_exponents(d: int, total: int) -> list[tuple[int, ...]]:
    # lex-descending: first variable's exponent decreases outermost
    if d == 1:
        return [(total,)]
    out = []
    for e in range(total, -1, -1):
        out.extend((e,) + rest for rest in _degree_exponents(d - 1, total - e))
    return out


def veronese(d: int, m: int) -> MonomialMap:
    """All non-constant monomials of degree <= m, degree ascending, lex within.

    Target dimension is C(d + m, m) - 1.
    """
    if d < 1 or m < 1:
        raise InputError("veronese needs d >= 1 and m >= 1")
    coords = []
    for deg in range(1, m + 1):
        coords.extend(_monomial(e) for e in _degree_exponents(d, deg))
    return MonomialMap(source_dim=d, coords=tuple(coords))


def homogeneous_veronese(d: int, m: int) -> MonomialMap:
    """All monomials of degree exactly m; target dimension C(d + m - 1, m)."""
    if d < 1 or m < 1:
        raise InputError("homogeneous veronese needs d >= 1 and m >= 1")
    return MonomialMap(
        source_dim=d,
        coords=tuple(_monomial(e) for e in _degree_exponents(d, m)),
    )


def circle_map() -> MonomialMap:
    """(x, y) -> (x, y, x^2 + y^2), the paraboloid-equivalent circle lift."""
    return MonomialMap(
        source_dim=2,
        coords=(
            _monomial((1, 0)),
            _monomial((0, 1)),
            ((1, (2, 0)), (1, (0, 2))),
        ),
    )


def moment_curve(d: int) -> MonomialMap:
    """t -> (t, t^2, ..., t^d)."""
    return veronese(1, d)


def neighborly_embedding(k: int, d: int) -> MonomialMap:
    """(x1..xd) -> (x1, x1^2, ..., x1^2k, x2, ..., xd) into dim 2k + d - 1."""
    if k < 1 or d < 1:
        raise InputError("embedding needs k >= 1 and d >= 1")
    coords = [_monomial(tuple(j if i == 0 else 0 for i in range(d)))
              for j in range(1, 2 * k + 1)]
    for axis in range(1, d):
        coords.append(_monomial(tuple(1 if i == axis else 0 for i in range(d))))
    return MonomialMap(source_dim=d, coords=tuple(coords))


def veronese_target_dim(d: int, m: int) -> int:
    return comb(d + m, m) - 1


def homogeneous_target_dim(d: int, m: int) -> int:
    return comb(d + m - 1, m)


def map_from_key(key: str) -> MonomialMap:
    """Resolve CLI map keys: veronese:d:m, hveronese:d:m, circle, moment:d, embed:k:d.

    ``custom:<file>`` keys are resolved by the serialization layer, not here.
    """
    parts = key.split(":")
    name, args = parts[0], parts[1:]
    try:
        if name == "veronese" and len(args) == 2:
            return veronese(int(args[0]), int(args[1]))
        if name == "hveronese" and len(args) == 2:
            return homogeneous_veronese(int(args[0]), int(args[1]))
        if name == "circle" and not args:
            return circle_map()
        if name == "moment" and len(args) == 1:
            return moment_curve(int(args[0]))
        if name == "embed" and len(args) == 2:
            return neighborly_embedding(int(args[0]), int(args[1]))
    except ValueError as exc:
        raise InputError(f"bad map key {key!r}") from exc
    raise InputError(f"unknown map key {key!r}")
