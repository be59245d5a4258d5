"""Planar achievement sets: axis gaps, rectangular gaps, and the gap lemmas.

A rectangular gap of a planar set E is a closed axis-parallel rectangle
[a,b] x [c,d] with a < b and c < d that meets E in exactly its lower-left
and upper-right corners.  An axis gap is an open interval between two
consecutive values in the projection of E onto one coordinate; for
achievement sets the corresponding full strip contains no point of E.

The one-dimensional story that every dominating gap is explained by a term
and a tail sum does not survive in the plane; this module carries a small
fixed series whose largest rectangular gap refutes the direct analogue, and
checkers for the statements that do survive.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union

from .errors import DomainError
from .rational import Point, Rat, format_rat
from .reports import CheckItem, LemmaReport, report
from .series import SeriesSpec, _subset_sums, series_spec
from .sets import FiniteSet

RECT_GAP_MODES = ("all", "largest-by-area")


@dataclass(frozen=True)
class RectGap:
    """The rectangle [a,b] x [c,d]; corners (a,c) and (b,d) belong to the
    ambient set, nothing else in the rectangle does."""

    a: Rat
    b: Rat
    c: Rat
    d: Rat

    @property
    def area(self) -> Rat:
        return (self.b - self.a) * (self.d - self.c)

    @property
    def lower(self) -> Point:
        return (self.a, self.c)

    @property
    def upper(self) -> Point:
        return (self.b, self.d)


@dataclass(frozen=True)
class AxisGap:
    axis: str  # "x" or "y"
    lo: Rat
    hi: Rat

    @property
    def length(self) -> Rat:
        return self.hi - self.lo


def _require_planar(E: FiniteSet) -> None:
    from .groups import RationalSpace

    if not isinstance(E.ctx, RationalSpace) or E.ctx.dim != 2:
        raise DomainError("a two-dimensional rational set is required")


def achievement_set_2d(s: SeriesSpec, budget: Optional[int] = None) -> FiniteSet:
    """Subset sums of a nonnegative planar series."""
    if s.dim != 2:
        raise DomainError("planar enumeration needs two-dimensional terms")
    if not s.nonnegative:
        raise DomainError("achievement sets are defined for nonnegative terms")
    return _subset_sums(s.ctx(), s.terms, budget)


def axis_gaps(E: FiniteSet) -> List[AxisGap]:
    """Open intervals between consecutive distinct coordinate values, for
    both axes; x-gaps first, each list left to right."""
    _require_planar(E)
    out: List[AxisGap] = []
    for axis, idx in (("x", 0), ("y", 1)):
        values = sorted({p[idx] for p in E})
        out.extend(AxisGap(axis, lo, hi) for lo, hi in zip(values, values[1:]))
    return out


def rect_gaps(E: FiniteSet, mode: str = "all") -> List[RectGap]:
    """All rectangular gaps of E, or only those of maximal area.

    For a fixed lower corner p the admissible upper corners are exactly the
    minimal elements of the part of E strictly above and to the right of p
    in the product order; a single sweep in lexicographic order finds them
    by tracking the least y seen so far.
    """
    if mode not in RECT_GAP_MODES:
        raise DomainError(f"unknown rect-gap mode {mode!r}")
    _require_planar(E)
    pts = E.elements
    found: List[RectGap] = []
    for p in pts:
        ax, ay = p
        min_y = None
        for q in pts:
            if q == p or q[0] < ax or q[1] < ay:
                continue
            if min_y is None or q[1] < min_y:
                if q[0] > ax and q[1] > ay:
                    found.append(RectGap(ax, q[0], ay, q[1]))
                min_y = q[1]
    found.sort(key=lambda g: (g.a, g.c, g.b, g.d))
    if mode == "largest-by-area":
        best = max(g.area for g in found) if found else None
        found = [g for g in found if g.area == best]
    return found


def is_rect_gap(E: FiniteSet, a: Rat, b: Rat, c: Rat, d: Rat) -> bool:
    """Direct check of the defining property, independent of the sweep."""
    _require_planar(E)
    if not (a < b and c < d):
        return False
    inside = [p for p in E if a <= p[0] <= b and c <= p[1] <= d]
    return sorted(inside) == [(a, c), (b, d)]


# -- gap lemmas ---------------------------------------------------------------

def first_gap_lemma_2d(s: SeriesSpec, k: int,
                       budget: Optional[int] = None) -> LemmaReport:
    """Gap predictions from the k-th term of a nonnegative planar series.

    With A_x the indices whose x-term is strictly below x_k: when x_k
    exceeds the x-sum over A_x, the interval (that sum, x_k) is an x-axis
    gap.  Symmetrically for y.  When additionally A_x and A_y coincide and
    both hypotheses hold, the rectangle they span is a rectangular gap.
    Parts whose hypothesis fails are reported as not applicable.
    """
    if s.dim != 2:
        raise DomainError("two-dimensional terms required")
    if not 1 <= k <= s.count:
        raise DomainError(f"k must lie in [1, {s.count}], got {k}")
    if not s.nonnegative:
        raise DomainError("nonnegative terms required")
    E = achievement_set_2d(s, budget)
    gaps = axis_gaps(E)
    xk, yk = s.terms[k - 1]
    ax_idx = [n for n in range(1, s.count + 1) if s.terms[n - 1][0] < xk]
    ay_idx = [n for n in range(1, s.count + 1) if s.terms[n - 1][1] < yk]
    sum_x = sum((s.terms[n - 1][0] for n in ax_idx), Fraction(0))
    sum_y = sum((s.terms[n - 1][1] for n in ay_idx), Fraction(0))
    items: List[CheckItem] = []

    def axis_item(axis: str, lo: Rat, hi: Rat, applicable: bool) -> None:
        label = f"{axis}-gap ({format_rat(lo)}, {format_rat(hi)})"
        if not applicable:
            items.append(CheckItem(f"{axis}-gap prediction", True,
                                   "hypothesis not satisfied"))
            return
        hit = any(g.axis == axis and g.lo == lo and g.hi == hi for g in gaps)
        items.append(CheckItem(label, hit,
                               "" if hit else "predicted interval is not an axis gap"))

    axis_item("x", sum_x, xk, xk > sum_x)
    axis_item("y", sum_y, yk, yk > sum_y)

    if ax_idx == ay_idx and xk > sum_x and yk > sum_y:
        hit = is_rect_gap(E, sum_x, xk, sum_y, yk)
        items.append(CheckItem(
            f"rect gap ({format_rat(sum_x)}, {format_rat(xk)}) x "
            f"({format_rat(sum_y)}, {format_rat(yk)})", hit,
            "" if hit else "predicted rectangle is not a gap"))
    else:
        items.append(CheckItem("rect-gap prediction", True,
                               "hypothesis not satisfied"))
    return report("first-gap-2d", items)


def second_gap_lemma_2d(s: SeriesSpec, gap: Union[RectGap, Tuple[Rat, Rat, Rat, Rat]],
                        budget: Optional[int] = None) -> LemmaReport:
    """Decompose the corners of a rectangular gap of a planar achievement set.

    With k the last index whose term reaches the gap's width or height, the
    upper corner is an initial sum from the first k terms, and the lower
    corner is an initial sum plus the full tail beyond k.  A rectangle that
    is not actually a gap fails the report; a series where no term reaches
    the gap size makes the lemma inapplicable, which is not a failure.
    """
    if s.dim != 2:
        raise DomainError("two-dimensional terms required")
    if not s.nonnegative:
        raise DomainError("nonnegative terms required")
    g = gap if isinstance(gap, RectGap) else RectGap(*gap)
    E = achievement_set_2d(s, budget)
    items: List[CheckItem] = []
    if not is_rect_gap(E, g.a, g.b, g.c, g.d):
        items.append(CheckItem("input rectangle is a gap of E", False,
                               "the defining property fails"))
        return report("second-gap-2d", items)
    items.append(CheckItem("input rectangle is a gap of E", True))

    width = g.b - g.a
    height = g.d - g.c
    qualifying = [n for n in range(1, s.count + 1)
                  if s.terms[n - 1][0] >= width or s.terms[n - 1][1] >= height]
    if not qualifying:
        items.append(CheckItem("applicability", True,
                               "no term reaches the gap size; nothing to check"))
        return report("second-gap-2d", items)
    k = max(qualifying)
    F_k = _subset_sums(s.ctx(), s.terms[:k], budget)
    items.append(CheckItem(
        f"upper corner in F_{k}", g.upper in F_k,
        f"corner ({format_rat(g.b)}, {format_rat(g.d)})"))
    tail_x = sum((t[0] for t in s.terms[k:]), Fraction(0))
    tail_y = sum((t[1] for t in s.terms[k:]), Fraction(0))
    f = (g.a - tail_x, g.c - tail_y)
    items.append(CheckItem(
        f"lower corner is an F_{k} sum plus the tail", f in F_k,
        f"initial part ({format_rat(f[0])}, {format_rat(f[1])})"))
    return report("second-gap-2d", items)


# -- the fixed counterexample -------------------------------------------------

def example_series() -> SeriesSpec:
    """The planar series whose largest rectangular gap has no term-and-tail
    explanation: terms (7/8, 1/8), (1/8, 7/8), (3/16, 3/16), (3/16, 3/16)."""
    return series_spec([
        ("7/8", "1/8"),
        ("1/8", "7/8"),
        ("3/16", "3/16"),
        ("3/16", "3/16"),
    ])


_EXAMPLE_POINTS: Tuple[Tuple[str, str], ...] = (
    ("0", "0"),
    ("1/8", "7/8"),
    ("3/16", "3/16"),
    ("5/16", "17/16"),
    ("3/8", "3/8"),
    ("1/2", "5/4"),
    ("7/8", "1/8"),
    ("1", "1"),
    ("17/16", "5/16"),
    ("19/16", "19/16"),
    ("5/4", "1/2"),
    ("11/8", "11/8"),
)

_EXAMPLE_GAP = RectGap(Fraction(3, 8), Fraction(1), Fraction(3, 8), Fraction(1))


def third_gap_failure_witness(budget: Optional[int] = None) -> LemmaReport:
    """Check the built-in counterexample to a planar third-gap principle.

    The achievement set of the example series has twelve points; its largest
    rectangular gap is (3/8, 1) x (3/8, 1), and no index m explains that gap
    in the one-dimensional shape (m-th term equal to the upper corner, tail
    beyond m equal to the lower corner).
    """
    s = example_series()
    E = achievement_set_2d(s, budget)
    expected = tuple((Fraction(x), Fraction(y)) for x, y in _EXAMPLE_POINTS)
    items: List[CheckItem] = []
    items.append(CheckItem(
        "achievement set has the expected 12 points",
        E.elements == expected,
        ", ".join(f"({format_rat(x)}, {format_rat(y)})" for x, y in E.elements)))
    largest = rect_gaps(E, mode="largest-by-area")
    items.append(CheckItem(
        "unique largest rectangular gap is (3/8, 1) x (3/8, 1)",
        largest == [_EXAMPLE_GAP],
        f"found {len(largest)} maximal gap(s)"))
    g = _EXAMPLE_GAP
    explained = False
    for m in range(1, s.count + 1):
        tail_x = sum((t[0] for t in s.terms[m:]), Fraction(0))
        tail_y = sum((t[1] for t in s.terms[m:]), Fraction(0))
        if s.terms[m - 1] == g.upper and (tail_x, tail_y) == g.lower:
            explained = True
    items.append(CheckItem(
        "no term and tail explain the gap corners", not explained,
        "corner (1, 1) is achieved only as a two-term sum"))
    return report("third-gap-failure", items)
