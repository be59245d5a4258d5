"""Finite point sets and their distance invariants.

The two central objects are the spectre and the center of distances of a
finite set A in an Abelian metric group:

* z lies in the spectre S(A) when every x in A has x+z in A or x-z in A;
* a distance value lies in the center C(A) when every x in A realizes it
  against some point of A.

Both are computed exactly.  Rational coordinates are rescaled once to a
common integer grid so the inner membership loops run on machine integers;
results are mapped back to canonical rationals at the end.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import DomainError, SpectreKitError
from .groups import (
    EUCLIDEAN_SQUARED,
    SUP,
    TAXICAB,
    DistValue,
    FiniteAbelian,
    GroupCtx,
    RationalSpace,
    group_add,
    group_neg,
    group_sub,
    require_same_ctx,
    validate_point,
    zero,
)
from .rational import Point, Rat

IntPoint = Tuple[int, ...]


@dataclass(frozen=True)
class FiniteSet:
    """A nonempty finite subset of an ambient group, in canonical form:
    validated points, deduplicated, sorted lexicographically."""

    ctx: GroupCtx
    elements: Tuple[Point, ...]

    @cached_property
    def _index(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, p: Point) -> bool:
        return p in self._index

    def __iter__(self) -> Iterator[Point]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def finite_set(ctx: GroupCtx, points: Iterable[Point]) -> FiniteSet:
    """Canonicalize ``points`` into a FiniteSet.  Duplicates collapse silently;
    an empty collection is rejected since spectres of the empty set are not
    defined here."""
    canon = sorted({validate_point(ctx, p) for p in points})
    if not canon:
        raise DomainError("a finite set needs at least one point")
    return FiniteSet(ctx, tuple(canon))


def translate(A: FiniteSet, t: Point) -> FiniteSet:
    t = validate_point(A.ctx, t)
    return finite_set(A.ctx, (group_add(A.ctx, p, t) for p in A))


def negate(A: FiniteSet) -> FiniteSet:
    return finite_set(A.ctx, (group_neg(A.ctx, p) for p in A))


def minkowski_sum(A: FiniteSet, B: FiniteSet) -> FiniteSet:
    require_same_ctx(A.ctx, B.ctx)
    return finite_set(A.ctx, (group_add(A.ctx, a, b) for a in A for b in B))


def difference_set(A: FiniteSet) -> FiniteSet:
    """A - A, the set of pairwise differences (always symmetric, contains 0)."""
    return finite_set(A.ctx, (group_sub(A.ctx, p, q) for p in A for q in A))


# -- integer-grid views -------------------------------------------------------

@dataclass
class _IntView:
    """Elements rescaled to an integer grid: coordinate c becomes c * scale.

    Finite Abelian contexts keep scale 1 and carry their moduli; rational
    contexts carry the metric name so distances can be computed in integers.
    """

    pts: List[IntPoint]
    scale: int
    moduli: Optional[Tuple[int, ...]]
    metric: Optional[str]

    def add(self, p: IntPoint, q: IntPoint) -> IntPoint:
        if self.moduli is not None:
            return tuple((a + b) % m for a, b, m in zip(p, q, self.moduli))
        return tuple(a + b for a, b in zip(p, q))

    def sub(self, p: IntPoint, q: IntPoint) -> IntPoint:
        if self.moduli is not None:
            return tuple((a - b) % m for a, b, m in zip(p, q, self.moduli))
        return tuple(a - b for a, b in zip(p, q))

    def neg(self, p: IntPoint) -> IntPoint:
        if self.moduli is not None:
            return tuple((-a) % m for a, m in zip(p, self.moduli))
        return tuple(-a for a in p)

    def unscale(self, p: IntPoint) -> Point:
        return tuple(Fraction(c, self.scale) for c in p)


def _int_view(A: FiniteSet) -> _IntView:
    if isinstance(A.ctx, FiniteAbelian):
        pts = [tuple(int(c) for c in p) for p in A.elements]
        return _IntView(pts, 1, A.ctx.moduli, None)
    scale = 1
    for p in A.elements:
        for c in p:
            scale = lcm(scale, c.denominator)
    pts = [tuple(c.numerator * (scale // c.denominator) for c in p) for p in A.elements]
    return _IntView(pts, scale, None, A.ctx.metric)


def _dist_int_fn(view: _IntView) -> Callable[[IntPoint, IntPoint], int]:
    if view.moduli is not None:
        moduli = view.moduli

        def d(p: IntPoint, q: IntPoint) -> int:
            worst = 0
            for a, b, m in zip(p, q, moduli):
                r = (a - b) % m
                wrap = min(r, m - r)
                if wrap > worst:
                    worst = wrap
            return worst

        return d
    if view.metric == SUP:
        return lambda p, q: max(abs(a - b) for a, b in zip(p, q))
    if view.metric == TAXICAB:
        return lambda p, q: sum(abs(a - b) for a, b in zip(p, q))
    return lambda p, q: sum((a - b) * (a - b) for a, b in zip(p, q))


def _dist_value(view: _IntView, raw: int) -> DistValue:
    if view.metric == EUCLIDEAN_SQUARED:
        return DistValue(Fraction(raw, view.scale * view.scale), squared=True)
    return DistValue(Fraction(raw, view.scale))


# -- spectre and center -------------------------------------------------------

SPECTRE_MODES = ("fast", "oracle")


def spectre(A: FiniteSet, mode: str = "fast") -> FiniteSet:
    """S(A) = {z : for every x in A, x+z in A or x-z in A}.

    The fast mode tests only candidates from (A - a) and (a - A) for a single
    anchor a, which is complete: any admissible z must move the anchor into A
    in one of the two directions.  The oracle mode rescans the full pairwise
    difference set (or the whole group, when it is finite) and exists so the
    two routes can be checked against each other.
    """
    if mode not in SPECTRE_MODES:
        raise DomainError(f"unknown spectre mode {mode!r}")
    view = _int_view(A)
    member = frozenset(view.pts)
    if mode == "fast":
        anchor = view.pts[0]
        candidates = {view.sub(p, anchor) for p in view.pts}
        candidates.update(view.sub(anchor, p) for p in view.pts)
    elif view.moduli is not None:
        candidates = {
            tuple(r) for r in itertools.product(*(range(m) for m in view.moduli))
        }
    else:
        candidates = {view.sub(p, q) for p in view.pts for q in view.pts}
        candidates.update(view.neg(c) for c in list(candidates))
    accepted = []
    for z in candidates:
        ok = True
        for x in view.pts:
            if view.add(x, z) not in member and view.sub(x, z) not in member:
                ok = False
                break
        if ok:
            accepted.append(z)
    return finite_set(A.ctx, (view.unscale(z) for z in accepted))


def distance_set(A: FiniteSet, x: Optional[Point] = None) -> List[DistValue]:
    """Distances realized inside A, or from the point ``x`` to A.  Sorted,
    without repeats; includes zero whenever x (or any point) sees itself."""
    view = _int_view(A)
    d = _dist_int_fn(view)
    if x is None:
        raws = {d(p, q) for p, q in itertools.combinations(view.pts, 2)}
        raws.add(0)
    else:
        x = validate_point(A.ctx, x)
        if view.moduli is not None:
            xi = tuple(int(c) for c in x)
        else:
            xi = tuple(c.numerator * (view.scale // c.denominator) for c in x)
        raws = {d(xi, p) for p in view.pts}
    return [_dist_value(view, r) for r in sorted(raws)]


def center_of_distances(A: FiniteSet) -> List[DistValue]:
    """C(A): distance values realized from every point of A.  Always contains
    zero; sorted ascending."""
    view = _int_view(A)
    d = _dist_int_fn(view)
    common: Optional[set] = None
    for p in view.pts:
        seen = {d(p, q) for q in view.pts}
        common = seen if common is None else (common & seen)
        if len(common) == 1:
            # Zero is realized from every point, so once the intersection
            # shrinks to {0} no later point can change it.
            break
    assert common is not None
    return [_dist_value(view, r) for r in sorted(common)]


# -- structural checkers ------------------------------------------------------

@dataclass(frozen=True)
class PairWitness:
    """Two element pairs certifying a failed check.  ``shared_value`` is the
    difference class both pairs realize (net-set check, a Point) or the
    distance both pairs realize (non-sliding check, a DistValue)."""

    pair_a: Tuple[Point, Point]
    pair_b: Tuple[Point, Point]
    shared_value: Union[Point, DistValue]


@dataclass(frozen=True)
class SetVerdict:
    ok: bool
    witness: Optional[PairWitness] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def is_net_set(A: FiniteSet) -> SetVerdict:
    """A net-set has at least three elements and no two distinct 2-element
    subsets whose differences agree up to sign.  Net-sets have trivial
    spectre: S(A) = {0}."""
    if len(A) < 3:
        return SetVerdict(False, reason="a net-set needs at least three elements")
    view = _int_view(A)
    seen = {}
    for i, j in itertools.combinations(range(len(view.pts)), 2):
        diff = view.sub(view.pts[i], view.pts[j])
        canon = max(diff, view.neg(diff))
        if canon in seen:
            a, b = seen[canon]
            witness = PairWitness(
                pair_a=(A.elements[a], A.elements[b]),
                pair_b=(A.elements[i], A.elements[j]),
                shared_value=view.unscale(canon),
            )
            return SetVerdict(False, witness=witness,
                              reason="two pairs share a difference up to sign")
        seen[canon] = (i, j)
    return SetVerdict(True)


def is_non_sliding(A: FiniteSet) -> SetVerdict:
    """A is non-sliding when every positive distance between its points is
    realized by exactly one unordered pair."""
    view = _int_view(A)
    d = _dist_int_fn(view)
    seen = {}
    for i, j in itertools.combinations(range(len(view.pts)), 2):
        raw = d(view.pts[i], view.pts[j])
        if raw in seen:
            a, b = seen[raw]
            witness = PairWitness(
                pair_a=(A.elements[a], A.elements[b]),
                pair_b=(A.elements[i], A.elements[j]),
                shared_value=_dist_value(view, raw),
            )
            return SetVerdict(False, witness=witness,
                              reason="two pairs realize the same distance")
        seen[raw] = (i, j)
    return SetVerdict(True)


def min_positive_distance(A: FiniteSet) -> Optional[DistValue]:
    """Smallest positive distance between two points of A, or None for a
    singleton."""
    if len(A) < 2:
        return None
    view = _int_view(A)
    d = _dist_int_fn(view)
    best = min(d(p, q) for p, q in itertools.combinations(view.pts, 2))
    return _dist_value(view, best)


# -- constructions ------------------------------------------------------------

def spectre_inflate(B: FiniteSet, x: Point) -> FiniteSet:
    """B together with its translate B + x, forcing {0, x} into the spectre
    of the result."""
    x = validate_point(B.ctx, x)
    if x == zero(B.ctx):
        raise DomainError("the shift must be nonzero")
    shifted = [group_add(B.ctx, b, x) for b in B]
    return finite_set(B.ctx, list(B.elements) + shifted)


def _perturbations(dim: int, eps: Rat) -> Iterator[Point]:
    """Deterministic stream of nonzero vectors with sup norm below eps.

    Candidates are eps/2^j along one axis plus eps/2^k along another, visited
    by increasing j+k so the stream contains vectors of arbitrarily small
    norm and, for any finite exclusion set, eventually a vector avoiding it.
    """
    zero_vec = [Fraction(0)] * dim
    for total in itertools.count(2):
        for j in range(1, total):
            k = total - j
            for i in range(dim):
                for m in range(dim):
                    v = list(zero_vec)
                    v[i] += eps / (1 << j)
                    v[m] += eps / (1 << k)
                    if max(abs(c) for c in v) < eps:
                        yield tuple(v)


_DENSIFY_SCAN_CAP = 20000


def _scan(candidates: Iterator[Point], accept: Callable[[Point], bool]) -> Point:
    for _, x in zip(range(_DENSIFY_SCAN_CAP), candidates):
        if accept(x):
            return x
    raise SpectreKitError("perturbation scan exhausted; this should be unreachable")


def densify_to_netset(B: FiniteSet, eps: Rat) -> FiniteSet:
    """A net-set within Hausdorff distance eps of B, in a rational space.

    Singletons grow to three points clustered within eps; pairs gain one
    nearby third point; larger sets keep each original point or nudge it by
    a vector of norm below eps, greedily keeping the partial set a net-set.
    """
    if not isinstance(B.ctx, RationalSpace):
        raise DomainError("densification needs a rational-space context")
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    ctx = B.ctx
    dim = ctx.dim

    def is_net(points: Sequence[Point]) -> bool:
        return bool(is_net_set(finite_set(ctx, points)))

    if len(B) == 1:
        b = B.elements[0]
        cands = _perturbations(dim, eps)
        x = next(cands)
        banned = {x, tuple(2 * c for c in x), tuple(-c for c in x),
                  tuple(-2 * c for c in x)}
        y = _scan(cands, lambda v: v not in banned
                  and is_net([b, group_add(ctx, b, x), group_add(ctx, b, v)]))
        return finite_set(ctx, [b, group_add(ctx, b, x), group_add(ctx, b, y)])

    if len(B) == 2:
        b1, b2 = B.elements
        diff = group_sub(ctx, b2, b1)
        neg_diff = group_neg(ctx, diff)

        def accept(x: Point) -> bool:
            # Cheap exclusions first: x must not reproduce b2 or land on a
            # midpoint/reflection that collapses a difference class; the net
            # check below is the authoritative guard.
            if x in (diff, neg_diff):
                return False
            double = tuple(2 * c for c in x)
            if group_add(ctx, b1, double) == b2 or group_sub(ctx, b1, double) == b2:
                return False
            c = group_add(ctx, b1, x)
            if c == b1 or c == b2:
                return False
            return is_net([b1, b2, c])

        x = _scan(_perturbations(dim, eps), accept)
        return finite_set(ctx, [b1, b2, group_add(ctx, b1, x)])

    built: List[Point] = list(B.elements[:2])
    for b in B.elements[2:]:
        if b not in built and is_net(built + [b]):
            built.append(b)
            continue
        x = _scan(
            _perturbations(dim, eps),
            lambda v: group_add(ctx, b, v) not in built
            and is_net(built + [group_add(ctx, b, v)]),
        )
        built.append(group_add(ctx, b, x))
    return finite_set(ctx, built)
