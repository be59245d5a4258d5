"""P-sum sets and translation structure around their gaps.

A P-sum set collects the values sum of xi_n * a_n where each coefficient
xi_n ranges over a fixed finite menu P containing 0.  For a gap (a, b) of
such a set T, the translation predicate at radius eps asks whether shifting
the initial segment T in [0, eps] by b reproduces T in [b, b + eps] exactly.
As a function of eps the predicate is piecewise constant, changing only at
positive elements of T and at distances from b to later elements, so finitely
many evaluations decide it everywhere; the checker reports the largest
radius that works, when one does.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .errors import DomainError, check_budget
from .groups import RationalSpace
from .rational import Rat, RatLike, as_rat
from .sets import FiniteSet, finite_set

_CTX_1D = RationalSpace(1)


@dataclass(frozen=True)
class PSpec:
    """Coefficient menu P (sorted, containing 0) and the term list."""

    coeffs: Tuple[Rat, ...]
    terms: Tuple[Rat, ...]


def pspec(coeffs: Iterable[RatLike], terms: Iterable[RatLike]) -> PSpec:
    cs = sorted({as_rat(c) for c in coeffs})
    ts = tuple(as_rat(t) for t in terms)
    if not cs:
        raise DomainError("the coefficient menu must be nonempty")
    if cs[0] != 0:
        if any(c < 0 for c in cs):
            raise DomainError("coefficients must be nonnegative")
        raise DomainError("the coefficient menu must contain 0")
    if not ts:
        raise DomainError("at least one term is required")
    if any(t < 0 for t in ts):
        raise DomainError("terms must be nonnegative")
    return PSpec(tuple(cs), ts)


def psum_set(spec: PSpec, budget: Optional[int] = None) -> FiniteSet:
    """T = {sum of xi_n a_n : xi_n in P}, as a one-dimensional set."""
    check_budget(len(spec.coeffs) ** len(spec.terms), budget)
    sums = {Fraction(0)}
    for a in spec.terms:
        sums = {s + xi * a for s in sums for xi in spec.coeffs}
    return finite_set(_CTX_1D, ((v,) for v in sums))


@dataclass(frozen=True)
class GapTranslationResult:
    """Largest radius at which the gap-translation predicate holds, along
    with every candidate radius that was evaluated (descending)."""

    ok: bool
    epsilon: Optional[Rat]
    candidates: Tuple[Rat, ...]


def _scalar_values(T: FiniteSet) -> List[Rat]:
    if not isinstance(T.ctx, RationalSpace) or T.ctx.dim != 1:
        raise DomainError("a one-dimensional rational set is required")
    return [p[0] for p in T.elements]


def gap_translation_check(T: FiniteSet,
                          gap: Tuple[RatLike, RatLike]) -> GapTranslationResult:
    """Evaluate the translation predicate of a gap (a, b) of T at every
    radius where its value can change, plus one radius below all of them,
    and report the largest radius at which it holds.

    The predicate at radius eps:  b + (T in [0, eps]) == T in [b, b + eps].
    T must contain 0 and (a, b) must be a gap: both endpoints in T with
    nothing strictly between.
    """
    xs = _scalar_values(T)
    if xs[0] != 0:
        raise DomainError("the set must contain 0 as its minimum")
    a, b = as_rat(gap[0]), as_rat(gap[1])
    if a not in xs or b not in xs or not a < b:
        raise DomainError(f"({a}, {b}) is not a gap of the set")
    if any(a < x < b for x in xs):
        raise DomainError(f"({a}, {b}) is not a gap of the set")

    breakpoints = {x for x in xs if x > 0}
    breakpoints.update(x - b for x in xs if x > b)
    candidates = sorted(breakpoints, reverse=True)
    candidates.append(min(breakpoints) / 2)

    def holds(eps: Rat) -> bool:
        left = {b + x for x in xs if 0 <= x <= eps}
        right = {x for x in xs if b <= x <= b + eps}
        return left == right

    for eps in candidates:
        if holds(eps):
            return GapTranslationResult(True, eps, tuple(candidates))
    return GapTranslationResult(False, None, tuple(candidates))


# -- the paired-Cantor demonstration ------------------------------------------

@dataclass(frozen=True)
class DemoReport:
    """Per-level translation radii for the paired endpoint construction.

    Each row is (level, radius) for the gap (1/4, 1/2) of the level's set.
    The construction glues two self-similar endpoint families of different
    contraction ratios, so the radii shrink as the level grows; at every
    finite level the predicate still holds at some positive radius, while
    the radii witness that no single radius survives all levels.
    """

    rows: Tuple[Tuple[int, Rat], ...]
    strictly_decreasing: bool
    note: str


_DEMO_GAP = (Fraction(1, 4), Fraction(1, 2))
_MAX_DEMO_LEVELS = 8


def _endpoint_level(ratio: Rat, depth: int) -> set:
    """Endpoints of the level-``depth`` intervals of the self-similar set on
    [0, 1] with contraction ``ratio`` at both ends."""
    pts = {Fraction(0), Fraction(1)}
    for _ in range(depth):
        pts = {ratio * p for p in pts} | {1 - ratio + ratio * p for p in pts}
    return pts


def demo_level_set(m: int) -> FiniteSet:
    """Level m of the paired construction: a ratio-1/4 endpoint family scaled
    into [0, 1/4], glued to a ratio-1/3 family scaled into [1/2, 3/4]."""
    quarter = Fraction(1, 4)
    third = Fraction(1, 3)
    left = {p * quarter for p in _endpoint_level(quarter, m)}
    right = {p * quarter + Fraction(1, 2) for p in _endpoint_level(third, m)}
    return finite_set(_CTX_1D, ((v,) for v in left | right))


def cantor_pair_demo(levels: int) -> DemoReport:
    """Translation radii for the gap (1/4, 1/2) across levels 0..``levels``."""
    if not 1 <= levels <= _MAX_DEMO_LEVELS:
        raise DomainError(f"levels must lie in [1, {_MAX_DEMO_LEVELS}]")
    rows: List[Tuple[int, Rat]] = []
    for m in range(levels + 1):
        result = gap_translation_check(demo_level_set(m), _DEMO_GAP)
        assert result.ok and result.epsilon is not None
        rows.append((m, result.epsilon))
    decreasing = all(rows[i][1] > rows[i + 1][1] for i in range(len(rows) - 1))
    return DemoReport(
        rows=tuple(rows),
        strictly_decreasing=decreasing,
        note=("finite levels only: each row reports the largest radius at "
              "which the gap-translation predicate holds for that level's "
              "finite endpoint set"),
    )
