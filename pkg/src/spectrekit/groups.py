"""Ambient groups: rational coordinate spaces and finite Abelian products.

Two kinds of context are supported.  ``RationalSpace(dim, metric)`` is Q^dim
under coordinatewise addition with a translation-invariant metric, and
``FiniteAbelian(moduli)`` is a product of cyclic groups Z_m with the discrete
torus metric.  Every point is a tuple of ``Rat`` coordinates in both kinds;
finite Abelian coordinates are integer-valued residues reduced into
``[0, m)``.

Distances are exact.  The euclidean metric on rational points generally has
an irrational value, so that choice computes the squared distance instead and
tags the result; tagged and untagged values refuse to be ordered against each
other, which keeps comparisons honest without ever leaving the rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple, Union

from .errors import DomainError, GroupMismatchError
from .rational import Point, Rat

SUP = "sup"
TAXICAB = "taxicab"
EUCLIDEAN_SQUARED = "euclidean-squared"
METRICS = (SUP, TAXICAB, EUCLIDEAN_SQUARED)

_ZERO = Fraction(0)


@dataclass(frozen=True)
class RationalSpace:
    """Q^dim with coordinatewise addition and a translation-invariant metric."""

    dim: int
    metric: str = SUP

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.dim!r}")
        if self.metric not in METRICS:
            raise DomainError(f"unknown metric {self.metric!r}, expected one of {METRICS}")


@dataclass(frozen=True)
class FiniteAbelian:
    """Z_{m_1} x ... x Z_{m_k}; elements are residue tuples, distances use the
    discrete torus metric min(|a-b|, m-|a-b|) per coordinate, aggregated by max."""

    moduli: Tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(m) for m in self.moduli)
        object.__setattr__(self, "moduli", moduli)
        if not moduli:
            raise DomainError("at least one modulus is required")
        if any(m < 2 for m in moduli):
            raise DomainError(f"every modulus must be at least 2, got {moduli}")

    @property
    def dim(self) -> int:
        return len(self.moduli)

    def order(self) -> int:
        return math.prod(self.moduli)

    def elements(self) -> List[Point]:
        """All group elements as residue tuples, in lexicographic order."""
        out: List[Point] = [()]
        for m in self.moduli:
            out = [p + (Fraction(r),) for p in out for r in range(m)]
        return out


GroupCtx = Union[RationalSpace, FiniteAbelian]


@dataclass(frozen=True)
class DistValue:
    """An exact distance value.  ``squared`` marks values produced by the
    euclidean-squared metric; ordering two values with different tags raises,
    since one would be a distance and the other a squared distance."""

    value: Rat
    squared: bool = False

    def _compatible(self, other: "DistValue") -> None:
        if not isinstance(other, DistValue):
            raise TypeError(f"cannot compare DistValue with {type(other).__name__}")
        if self.squared != other.squared:
            raise DomainError("cannot order a squared distance against a plain one")

    def __lt__(self, other: "DistValue") -> bool:
        self._compatible(other)
        return self.value < other.value

    def __le__(self, other: "DistValue") -> bool:
        self._compatible(other)
        return self.value <= other.value

    def __gt__(self, other: "DistValue") -> bool:
        self._compatible(other)
        return self.value > other.value

    def __ge__(self, other: "DistValue") -> bool:
        self._compatible(other)
        return self.value >= other.value

    def is_zero(self) -> bool:
        return self.value == 0


def ctx_dim(ctx: GroupCtx) -> int:
    return ctx.dim


def zero(ctx: GroupCtx) -> Point:
    return (_ZERO,) * ctx_dim(ctx)


def require_same_ctx(a: GroupCtx, b: GroupCtx) -> None:
    if a != b:
        raise GroupMismatchError(f"ambient groups differ: {a} vs {b}")


def validate_point(ctx: GroupCtx, p: Point) -> Point:
    """Check that ``p`` belongs to ``ctx`` and return it in canonical form.

    Rational-space points pass through unchanged; finite Abelian points must
    have integer coordinates, which are reduced into ``[0, m)``.
    """
    if not isinstance(p, tuple) or len(p) != ctx_dim(ctx):
        raise DomainError(f"expected a {ctx_dim(ctx)}-coordinate point, got {p!r}")
    coords = tuple(Fraction(c) for c in p)
    if isinstance(ctx, FiniteAbelian):
        reduced = []
        for c, m in zip(coords, ctx.moduli):
            if c.denominator != 1:
                raise DomainError(f"residue coordinates must be integers, got {c}")
            reduced.append(Fraction(c.numerator % m))
        return tuple(reduced)
    return coords


def group_add(ctx: GroupCtx, p: Point, q: Point) -> Point:
    if isinstance(ctx, FiniteAbelian):
        return tuple(
            Fraction((int(a) + int(b)) % m)
            for a, b, m in zip(p, q, ctx.moduli)
        )
    return tuple(a + b for a, b in zip(p, q))


def group_neg(ctx: GroupCtx, p: Point) -> Point:
    if isinstance(ctx, FiniteAbelian):
        return tuple(Fraction((-int(a)) % m) for a, m in zip(p, ctx.moduli))
    return tuple(-a for a in p)


def group_sub(ctx: GroupCtx, p: Point, q: Point) -> Point:
    return group_add(ctx, p, group_neg(ctx, q))


def scalar_mul(ctx: GroupCtx, n: int, p: Point) -> Point:
    """n-fold sum of ``p`` with itself (n may be negative or zero)."""
    if isinstance(ctx, FiniteAbelian):
        return tuple(Fraction((int(a) * n) % m) for a, m in zip(p, ctx.moduli))
    return tuple(a * n for a in p)


def dist(ctx: GroupCtx, p: Point, q: Point) -> DistValue:
    """Exact distance between two points of ``ctx``."""
    if isinstance(ctx, FiniteAbelian):
        worst = 0
        for a, b, m in zip(p, q, ctx.moduli):
            r = (int(a) - int(b)) % m
            worst = max(worst, min(r, m - r))
        return DistValue(Fraction(worst))
    diffs = [abs(a - b) for a, b in zip(p, q)]
    if ctx.metric == SUP:
        return DistValue(max(diffs))
    if ctx.metric == TAXICAB:
        return DistValue(sum(diffs, _ZERO))
    return DistValue(sum((d * d for d in diffs), _ZERO), squared=True)


def triangle_holds(ab: DistValue, bc: DistValue, ac: DistValue) -> bool:
    """Decide d(a,c) <= d(a,b) + d(b,c) exactly.

    For squared values this is the inequality between square roots, decided
    without leaving the rationals:  sqrt(s) <= sqrt(u) + sqrt(v)  iff
    s - u - v <= 0 or (s - u - v)^2 <= 4uv.
    """
    if not (ab.squared == bc.squared == ac.squared):
        raise DomainError("mixed squared and plain distances")
    if not ab.squared:
        return ac.value <= ab.value + bc.value
    gap = ac.value - ab.value - bc.value
    if gap <= 0:
        return True
    return gap * gap <= 4 * ab.value * bc.value


def subgroup_generated(ctx: FiniteAbelian, x: Point):
    """The cyclic subgroup <x> of a finite Abelian group, as a FiniteSet."""
    if not isinstance(ctx, FiniteAbelian):
        raise DomainError("subgroup enumeration needs a finite Abelian context")
    from .sets import finite_set

    x = validate_point(ctx, x)
    seen = [zero(ctx)]
    current = x
    while current != seen[0]:
        seen.append(current)
        current = group_add(ctx, current, x)
    return finite_set(ctx, seen)
