"""The hyperspace view: Hausdorff distance and behaviour of the spectre map.

The spectre map A -> S(A) is wildly discontinuous in the Hausdorff metric at
most sets, but upper semicontinuous everywhere and continuous exactly at the
sets with trivial spectre.  Those facts are about limits, which a finite
computation cannot certify; what it can do is probe a convergent family and
report either a persistent lower bound on the spectre displacement (a
discontinuity witness) or its absence.  The report states which of the two
happened and never claims more.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, lcm
from typing import List, Optional, Sequence, Tuple

from .errors import DomainError, check_budget
from .groups import (
    EUCLIDEAN_SQUARED,
    DistValue,
    FiniteAbelian,
    RationalSpace,
    require_same_ctx,
)
from .rational import Rat
from .sets import (
    FiniteSet,
    IntPoint,
    _dist_int_fn,
    _dist_value,
    _IntView,
    finite_set,
    min_positive_distance,
    spectre,
)


def _joint_view(A: FiniteSet, B: FiniteSet) -> Tuple[_IntView, List[IntPoint], List[IntPoint]]:
    """Rescale two sets of the same context onto one integer grid."""
    require_same_ctx(A.ctx, B.ctx)
    if isinstance(A.ctx, FiniteAbelian):
        pa = [tuple(int(c) for c in p) for p in A.elements]
        pb = [tuple(int(c) for c in p) for p in B.elements]
        return _IntView(pa + pb, 1, A.ctx.moduli, None), pa, pb
    scale = 1
    for S in (A, B):
        for p in S.elements:
            for c in p:
                scale = lcm(scale, c.denominator)

    def conv(S: FiniteSet) -> List[IntPoint]:
        return [
            tuple(c.numerator * (scale // c.denominator) for c in p)
            for p in S.elements
        ]

    pa, pb = conv(A), conv(B)
    return _IntView(pa + pb, scale, None, A.ctx.metric), pa, pb


def hausdorff(A: FiniteSet, B: FiniteSet) -> DistValue:
    """Exact Hausdorff distance: the larger of the two directed distances
    max_a min_b d(a, b) and max_b min_a d(a, b)."""
    view, pa, pb = _joint_view(A, B)
    d = _dist_int_fn(view)

    def directed(ps: List[IntPoint], qs: List[IntPoint]) -> int:
        return max(min(d(p, q) for q in qs) for p in ps)

    return _dist_value(view, max(directed(pa, pb), directed(pb, pa)))


def fatten_contains(B: FiniteSet, A: FiniteSet, eps: Rat) -> bool:
    """Whether B lies inside the open eps-fattening of A: every point of B is
    at distance strictly below eps from some point of A.  Under the
    euclidean-squared metric eps is compared against squared values."""
    eps = Fraction(eps)
    if eps <= 0:
        raise DomainError("fattening radius must be positive")
    view, pa, pb = _joint_view(A, B)
    d = _dist_int_fn(view)
    if view.metric == EUCLIDEAN_SQUARED:
        threshold = eps * view.scale * view.scale
    else:
        threshold = eps * view.scale
    return all(min(d(b, a) for a in pa) < threshold for b in pb)


# -- continuity probes --------------------------------------------------------

CONTINUOUS_LOOKING = "continuous-looking"
DISCONTINUITY_WITNESSED = "discontinuity-witnessed"


@dataclass(frozen=True)
class ProbeRow:
    index: int
    input_distance: DistValue
    spectre_distance: DistValue
    usc_ok: bool


@dataclass(frozen=True)
class ProbeReport:
    """Outcome of probing the spectre map along a finite family.

    The verdict is "discontinuity-witnessed" when the family genuinely
    approaches the base set (nonincreasing input distances, strictly closer
    at the end than at the start) while the spectre displacement stays
    positive on the tail half of the rows; tail_bound is then the smallest
    displacement seen on that tail.  Anything else is "continuous-looking",
    which claims nothing beyond the rows shown.
    """

    rows: Tuple[ProbeRow, ...]
    epsilon: Rat
    verdict: str
    tail_bound: Optional[Rat]
    usc_tail_ok: bool


def probe_spectre_continuity(A: FiniteSet, family: Sequence[FiniteSet],
                             eps: Rat) -> ProbeReport:
    """Compare S(A) with the spectres along ``family``.

    Each row records the Hausdorff distance of the member to A, the Hausdorff
    displacement of its spectre from S(A), and whether the member's spectre
    stays inside the eps-fattening of S(A) (the upper-semicontinuity check).
    """
    eps = Fraction(eps)
    if not family:
        raise DomainError("the probe family must be nonempty")
    SA = spectre(A)
    rows = []
    for i, member in enumerate(family, start=1):
        require_same_ctx(A.ctx, member.ctx)
        SM = spectre(member)
        rows.append(ProbeRow(
            index=i,
            input_distance=hausdorff(A, member),
            spectre_distance=hausdorff(SA, SM),
            usc_ok=fatten_contains(SM, SA, eps),
        ))
    approaching = all(
        rows[i + 1].input_distance.value <= rows[i].input_distance.value
        for i in range(len(rows) - 1)
    ) and rows[-1].input_distance.value < rows[0].input_distance.value
    tail = rows[len(rows) - ceil(len(rows) / 2):]
    positive_tail = all(r.spectre_distance.value > 0 for r in tail)
    if approaching and positive_tail:
        verdict = DISCONTINUITY_WITNESSED
        tail_bound = min(r.spectre_distance.value for r in tail)
    else:
        verdict = CONTINUOUS_LOOKING
        tail_bound = None
    return ProbeReport(
        rows=tuple(rows),
        epsilon=eps,
        verdict=verdict,
        tail_bound=tail_bound,
        usc_tail_ok=all(r.usc_ok for r in tail),
    )


def perturbation_family(A: FiniteSet, count: int = 8) -> List[FiniteSet]:
    """A standard convergent family: move the lexicographically largest point
    of A along the first axis by base/2^n for n = 1..count, where base is a
    quarter of the smallest positive distance in A (or 1/4 for singletons).
    The offsets are small enough that the n-th member is at Hausdorff
    distance exactly base/2^n from A."""
    if not isinstance(A.ctx, RationalSpace):
        raise DomainError("perturbation families need a rational-space context")
    if count < 2:
        raise DomainError("need at least two family members")
    eta = min_positive_distance(A)
    base = Fraction(1, 4) if eta is None else min(Fraction(1), eta.value) / 4
    moved = A.elements[-1]
    rest = A.elements[:-1]
    family = []
    for n in range(1, count + 1):
        offset = base / (1 << n)
        shifted = (moved[0] + offset,) + moved[1:]
        family.append(finite_set(A.ctx, rest + (shifted,)))
    return family


# -- image refutation ---------------------------------------------------------

@dataclass(frozen=True)
class RefuteResult:
    """Outcome of scanning a finite group for a set whose spectre equals the
    target.  ``found`` with a witness, or a completed scan proving there is
    none; ``scanned`` counts the candidate subsets examined."""

    found: bool
    witness: Optional[FiniteSet]
    scanned: int


def refute_spectre_image(ctx: FiniteAbelian, target: FiniteSet,
                         budget: Optional[int] = None) -> RefuteResult:
    """Search all nonempty subsets of a finite Abelian group for one whose
    spectre is ``target``.  Subsets are visited in mask order over the
    lexicographically sorted group elements, so the witness, when one exists,
    is deterministic."""
    if not isinstance(ctx, FiniteAbelian):
        raise DomainError("image refutation scans a finite Abelian group")
    require_same_ctx(ctx, target.ctx)
    order = ctx.order()
    check_budget(1 << order, budget)
    elems = [tuple(int(c) for c in p) for p in sorted(ctx.elements())]
    moduli = ctx.moduli
    target_ints = frozenset(tuple(int(c) for c in p) for p in target)

    def add(p: IntPoint, q: IntPoint) -> IntPoint:
        return tuple((a + b) % m for a, b, m in zip(p, q, moduli))

    def sub(p: IntPoint, q: IntPoint) -> IntPoint:
        return tuple((a - b) % m for a, b, m in zip(p, q, moduli))

    scanned = 0
    for mask in range(1, 1 << order):
        pts = [elems[i] for i in range(order) if mask >> i & 1]
        scanned += 1
        member = frozenset(pts)
        anchor = pts[0]
        cands = {sub(p, anchor) for p in pts}
        cands.update(sub(anchor, p) for p in pts)
        spec = set()
        for z in cands:
            if all(add(x, z) in member or sub(x, z) in member for x in pts):
                spec.add(z)
        if spec == target_ints:
            witness = finite_set(ctx, ((tuple(Fraction(c) for c in p)) for p in pts))
            return RefuteResult(True, witness, scanned)
    return RefuteResult(False, None, scanned)
