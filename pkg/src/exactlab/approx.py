"""Best approximations of a cut from below and above, and the gap-ratio
families built from them.

For a cut ``c`` and a bound ``d``, an index ``e <= d`` is a *left best
approximation* if ``f(e) < c`` and no earlier index has a value strictly
between ``f(e)`` and ``c``; right best approximations are symmetric.  The
values of the two current record holders bracket the cut:
``l < c < r``.

A :class:`RatioFamily` attaches to each left best approximation ``e`` of an
outer cut ``a`` the ratio ``(r - l) / (b - l)`` of the bracket that a second
cut ``b`` has at bound ``e``.  The family is *admissible* when neither cut
lies on the materialized image and the ratios are strictly increasing; the
extraction pipeline drives these ratios onto 1, 2, 3, ...

Bracket convention: at the very first index the cut has one-sided data only
(there is a single value).  Whenever a bound fails to bracket the cut, the
bracket is taken at the first later index at which values exist on both
sides.  This is forced by the base case of the extraction (a two-element
prefix carries the first meaningful ratio) and depends only on the cut and
the anchor index, never on the ambient bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    CutInImage,
    EmptySet,
    EpsTooLarge,
    NoLeftValue,
    NoRightValue,
    NotASegment,
    NotInJ,
    VerificationError,
)
from .dsets import DiscreteSet, FunctionOracle, is_approx_segment
from .qnum import ExactNumber, exact

_QUARTER = exact("1/4")


@dataclass(frozen=True)
class ApproxState:
    """Best-approximation data of one cut at one bound."""

    L: DiscreteSet
    R: DiscreteSet
    l: ExactNumber
    r: ExactNumber
    cut: ExactNumber
    bound: ExactNumber

    def __post_init__(self):
        assert self.l < self.cut < self.r, "bracket must straddle the cut"

    def stability(self) -> tuple[ExactNumber, ExactNumber]:
        return (self.l, self.r)


def gap_ratio(a, b, c) -> ExactNumber:
    """(c - a) / (b - a) when a < b < c, else 0."""
    a, b, c = (ExactNumber.coerce(v) for v in (a, b, c))
    if a < b < c:
        return (c - a) / (b - a)
    return ExactNumber(0)


def best_approx(D: DiscreteSet, f: FunctionOracle, cut, bound) -> ApproxState:
    """Left and right best approximations of ``cut`` among D-elements <= bound.

    Raises NoLeftValue / NoRightValue when all values within the bound lie on
    one side of the cut.
    """
    cut = ExactNumber.coerce(cut)
    bound = ExactNumber.coerce(bound)
    Dd = D.restrict(bound)
    if len(Dd) == 0:
        raise EmptySet(f"no elements at or below {bound}")
    left: list[ExactNumber] = []
    right: list[ExactNumber] = []
    best_l: Optional[ExactNumber] = None
    best_r: Optional[ExactNumber] = None
    for e in Dd:
        v = f.eval(e)
        side = v.compare(cut)
        if side < 0:
            # qualifies iff no earlier value sits in (v, cut)
            if best_l is None or best_l <= v:
                left.append(e)
                best_l = v
        elif side > 0:
            if best_r is None or best_r >= v:
                right.append(e)
                best_r = v
    if best_l is None:
        raise NoLeftValue(f"no value below {cut} within bound {bound}")
    if best_r is None:
        raise NoRightValue(f"no value above {cut} within bound {bound}")
    return ApproxState(L=DiscreteSet(left), R=DiscreteSet(right),
                       l=best_l, r=best_r, cut=cut, bound=bound)


def stability_interval(D: DiscreteSet, f: FunctionOracle, cut, bound,
                       verify_samples: int = 0, seed: int = 0
                       ) -> tuple[ExactNumber, ExactNumber]:
    """Open interval around the cut on which L and R do not change.

    Any cut drawn from the returned bracket reproduces identical L and R
    sets.  Requires the cut to lie off the image of the bounded prefix.
    ``verify_samples`` re-derives L and R at that many seeded random cuts
    inside the interval (a configuration knob, not part of the contract).
    """
    cut = ExactNumber.coerce(cut)
    bound = ExactNumber.coerce(bound)
    for e in D.restrict(bound):
        if f.eval(e) == cut:
            raise CutInImage(f"{cut} is an image value at or below {bound}")
    state = best_approx(D, f, cut, bound)
    lo, hi = state.stability()
    if verify_samples:
        rng = random.Random(seed)
        width = hi - lo
        for _ in range(verify_samples):
            b = lo + width * Fraction(rng.randrange(1, 10 ** 6), 10 ** 6 + 1)
            resampled = best_approx(D, f, b, bound)
            if resampled.L != state.L or resampled.R != state.R:
                raise VerificationError(
                    f"approximations changed inside ({lo}, {hi}) at cut {b}")
    return (lo, hi)


@dataclass(frozen=True)
class RatioTerm:
    """One gap ratio of the inner cut, anchored at a left best approximation
    of the outer cut."""

    anchor: ExactNumber          # the left-best-approximation element e
    bound_used: ExactNumber      # first element >= anchor whose prefix brackets the cut
    left: ExactNumber
    right: ExactNumber
    value: ExactNumber           # (right - left) / (cut - left)


@dataclass(frozen=True)
class RatioFamily:
    """The candidate approximate integer set built from bracket ratios."""

    a: ExactNumber               # outer cut: its left best approximations anchor the terms
    b: ExactNumber               # inner cut: its brackets produce the ratios
    d: ExactNumber               # ambient bound
    yset: DiscreteSet            # {0} united with the term values, duplicates collapsed
    admissible: bool             # cuts off the materialized image, ratios strictly increasing
    terms: tuple[RatioTerm, ...]
    approx: ApproxState          # best-approximation state of the outer cut at d
    checked_bound: ExactNumber   # largest element used for the off-image checks


def _bracket_terms(D: DiscreteSet, f: FunctionOracle, cut: ExactNumber,
                   anchors: Sequence[ExactNumber]) -> list[RatioTerm]:
    """Bracket data of ``cut`` at each anchor, in one pass over D.

    Applies the first-bracketing-bound fallback where an anchor's prefix has
    values on one side only.
    """
    terms: list[RatioTerm] = []
    pending = sorted(anchors)
    idx = 0
    best_l: Optional[ExactNumber] = None
    best_r: Optional[ExactNumber] = None
    for e in D:
        v = f.eval(e)
        side = v.compare(cut)
        if side < 0 and (best_l is None or best_l < v):
            best_l = v
        elif side > 0 and (best_r is None or best_r > v):
            best_r = v
        while idx < len(pending) and pending[idx] <= e:
            if best_l is None or best_r is None:
                break  # not bracketed yet: fall through to a later bound
            anchor = pending[idx]
            terms.append(RatioTerm(
                anchor=anchor, bound_used=e, left=best_l, right=best_r,
                value=gap_ratio(best_l, cut, best_r)))
            idx += 1
    if idx < len(pending):
        if best_l is None:
            raise NoLeftValue(
                f"no value below {cut} in the materialized prefix")
        raise NoRightValue(
            f"no value above {cut} in the materialized prefix")
    return terms


def ratio_family(D: DiscreteSet, f: FunctionOracle, a, b, d) -> RatioFamily:
    """Build the ratio family of cuts (a, b) at bound d.

    Anchors are the left best approximations of ``a`` at bound ``d``; each
    contributes the gap ratio of ``b`` at that anchor.  Membership of the
    cuts in the image is decided against the materialized prefix ``D`` and
    recorded via ``checked_bound``.
    """
    a = ExactNumber.coerce(a)
    b = ExactNumber.coerce(b)
    d = ExactNumber.coerce(d)
    state = best_approx(D, f, a, d)
    terms = _bracket_terms(D, f, b, state.L.elements)
    values = [t.value for t in terms]
    increasing = all(x < y for x, y in zip(values, values[1:]))
    img = {f.eval(e) for e in D}
    off_image = a not in img and b not in img
    yset = DiscreteSet([ExactNumber(0)] + values)
    return RatioFamily(a=a, b=b, d=d, yset=yset,
                       admissible=increasing and off_image,
                       terms=tuple(terms), approx=state,
                       checked_bound=D.max())


def widen_interval(D: DiscreteSet, f: FunctionOracle, fam: RatioFamily,
                   eps, anchor_upto, verify_samples: int = 0, seed: int = 0
                   ) -> tuple[ExactNumber, ExactNumber]:
    """Open interval around the inner cut on which every term moves by less
    than eps.

    Solved in closed form per term: for a fixed bracket (l, r) the ratio
    c -> (r - l)/(c - l) is strictly decreasing on (l, r), so the admissible
    window for each term is the preimage of (t0 - eps, t0 + eps), capped at
    r when t0 - eps drops to 1 or below.  The intersection is further
    clipped to the bracket of the inner cut at the ambient bound, so every
    cut drawn from the window keeps identical bracket data at every anchor.

    ``verify_samples`` rebuilds the family at that many seeded random cuts
    inside the window (skipping image values) and checks each is admissible
    and a 3*eps-segment; a failure raises, since the window computation
    would have to be wrong.
    """
    eps = ExactNumber.coerce(eps)
    anchor_upto = ExactNumber.coerce(anchor_upto)
    if eps.compare(_QUARTER) >= 0:
        raise EpsTooLarge(f"eps must be < 1/4, got {eps}")
    if not fam.admissible:
        raise NotInJ("widen_interval needs an admissible family")
    if not is_approx_segment(fam.yset, eps, anchor_upto):
        raise NotASegment(
            f"family set is not an {eps}-segment up to {anchor_upto}")
    ambient = _bracket_terms(D, f, fam.b, [fam.d])[0]
    lo, hi = ambient.left, ambient.right
    for term in fam.terms:
        l, r, t0 = term.left, term.right, term.value
        width = r - l
        t_lo = l + width / (t0 + eps)
        if lo < t_lo:
            lo = t_lo
        if (t0 - eps).compare(1) > 0:
            t_hi = l + width / (t0 - eps)
            if hi > t_hi:
                hi = t_hi
        elif hi > r:
            hi = r
    assert lo < fam.b < hi, "inner cut must sit inside its own window"
    if verify_samples:
        rng = random.Random(seed)
        width = hi - lo
        image_values = {f.eval(e) for e in D}
        for _ in range(verify_samples):
            c = lo + width * Fraction(rng.randrange(1, 10 ** 6), 10 ** 6 + 1)
            if c in image_values:
                continue
            moved = ratio_family(D, f, fam.a, c, fam.d)
            if not moved.admissible or \
                    not is_approx_segment(moved.yset, 3 * eps, anchor_upto):
                raise VerificationError(
                    f"window ({lo}, {hi}) failed at sampled cut {c}: "
                    f"{moved.yset}")
    return (lo, hi)
