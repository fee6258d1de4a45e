"""Exact analysis of piecewise-linear functions: discontinuity sets, Dini
derivatives, the rising-sun decomposition with its length bound, monotone
inverses, and a mesh-scale differentiability survey.

Everything is decided with exact arithmetic: the rising-sun set of a PL
function is a finite union of open intervals whose endpoints solve linear
equations, so the classical inequalities are verified with zero tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import (
    NotMonotone,
    NotStrictlyIncreasing,
    OutOfDomain,
    VerificationError,
)
from .dsets import ValueSet
from .plfun import PLFunction
from .qnum import ExactNumber


class _Infinity:
    __slots__ = ("sign",)

    def __init__(self, sign: int):
        object.__setattr__(self, "sign", sign)

    def __setattr__(self, name, value):
        raise AttributeError("immutable")

    def __repr__(self) -> str:
        return "+inf" if self.sign > 0 else "-inf"

    def __eq__(self, other):
        return isinstance(other, _Infinity) and other.sign == self.sign

    def __hash__(self):
        return hash(("inf", self.sign))


POS_INF = _Infinity(1)
NEG_INF = _Infinity(-1)

DiniValue = Union[ExactNumber, _Infinity]


def is_finite(v: DiniValue) -> bool:
    return isinstance(v, ExactNumber)


# -- discontinuities ---------------------------------------------------------

def jump_points(f: PLFunction, threshold) -> ValueSet:
    """Breakpoints of a monotone function whose jump exceeds the threshold.

    The family is nested: a larger threshold keeps a subset.
    """
    threshold = ExactNumber.coerce(threshold)
    if threshold.sign() <= 0:
        raise ValueError("threshold must be positive")
    if not f.is_nondecreasing():
        raise NotMonotone("jump_points needs a nondecreasing function")
    return ValueSet(p.x for p in f.points if p.right - p.left > threshold)


# -- Dini derivatives ---------------------------------------------------------

@dataclass(frozen=True)
class DiniValues:
    lower_left: DiniValue
    upper_left: DiniValue
    lower_right: DiniValue
    upper_right: DiniValue

    def as_tuple(self):
        return (self.lower_left, self.upper_left,
                self.lower_right, self.upper_right)

    def all_equal_finite(self) -> bool:
        vals = self.as_tuple()
        return all(is_finite(v) for v in vals) and len({*vals}) == 1


def dini(f: PLFunction, x) -> DiniValues:
    """The four one-sided extreme difference quotients at an interior point.

    Exact for PL functions: off breakpoints all four equal the piece slope;
    at a continuous breakpoint the pairs are the two adjacent slopes; at a
    jump the left pair is infinite with the sign the jump forces (the value
    at a breakpoint is its right limit, so the right pair stays finite).
    """
    x = ExactNumber.coerce(x)
    a, b = f.domain
    if not a < x < b:
        raise OutOfDomain(f"{x} is not interior to [{a}, {b}]")
    i = f._locate(x)
    p = f.points[i]
    if p.x != x:
        s = f.slope(i)
        return DiniValues(s, s, s, s)
    right_slope = f.slope(i)
    if p.left == p.right:
        left_slope = f.slope(i - 1)
        return DiniValues(left_slope, left_slope, right_slope, right_slope)
    inf = POS_INF if p.right > p.left else NEG_INF
    return DiniValues(inf, inf, right_slope, right_slope)


# -- rising sun ---------------------------------------------------------------

@dataclass(frozen=True)
class ShadowCheck:
    start: ExactNumber            # left end a' of a maximal component
    end: ExactNumber              # right end b'
    entry_limit: ExactNumber      # right limit of g at a'
    roof: ExactNumber             # G(b')
    holds: bool                   # entry_limit <= roof


@dataclass(frozen=True)
class SunResult:
    components: tuple[tuple[ExactNumber, ExactNumber], ...]
    shadows: tuple[ShadowCheck, ...]

    def measure(self) -> ExactNumber:
        total = ExactNumber(0)
        for lo, hi in self.components:
            total = total + (hi - lo)
        return total


def _roof(g: PLFunction, x: ExactNumber) -> ExactNumber:
    """max of the value and the two-sided limit superior at x, for x > a."""
    left = g.left_limit(x)
    right = g.right_limit_or_value(x)
    return left if left > right else right


def rising_sun(g: PLFunction) -> SunResult:
    """The open set of points from which some later point of g is strictly
    higher, as maximal components, each with its verified entry inequality.

    Computed by a right-to-left sweep carrying the supremum of g over the
    remaining interval; inside a piece the membership condition is a linear
    inequality solved exactly.
    """
    pts = g.points
    n = len(pts) - 1
    # future_sup[j] = sup of g over (x_j, b]; None encodes the empty tail
    future_sup: list[Optional[ExactNumber]] = [None] * (n + 1)
    for j in range(n - 1, -1, -1):
        cand = pts[j].right
        for v in (pts[j + 1].left, pts[j + 1].right, future_sup[j + 1]):
            if v is not None and v > cand:
                cand = v
        future_sup[j] = cand

    pieces: list[Optional[tuple[ExactNumber, ExactNumber]]] = []
    for i in range(n):
        # constant part of the future supremum seen from inside piece i
        c = pts[i + 1].left
        for v in (pts[i + 1].right, future_sup[i + 1]):
            if v is not None and v > c:
                c = v
        x0, x1 = pts[i].x, pts[i + 1].x
        v0 = pts[i].right
        s = g.slope(i)
        if s.sign() == 0:
            pieces.append((x0, x1) if v0 < c else None)
            continue
        crossing = x0 + (c - v0) / s
        if s.sign() > 0:
            hi = crossing if crossing < x1 else x1
            pieces.append((x0, hi) if hi > x0 else None)
        else:
            lo = crossing if crossing > x0 else x0
            pieces.append((lo, x1) if lo < x1 else None)

    components: list[tuple[ExactNumber, ExactNumber]] = []
    current: Optional[tuple[ExactNumber, ExactNumber]] = None
    for i in range(n):
        sub = pieces[i]
        if i > 0:
            x = pts[i].x
            in_e = future_sup[i] > max(pts[i].left, pts[i].right)
            if in_e:
                # a qualifying breakpoint always glues two piece intervals
                assert current is not None and current[1] == x, \
                    "breakpoint in the sun set must extend a component"
                assert sub is not None and sub[0] == x
                current = (current[0], sub[1])
                continue
        if sub is None:
            if current is not None:
                components.append(current)
                current = None
        elif current is not None and current[1] == sub[0]:
            components.append(current)
            current = sub
        else:
            if current is not None:
                components.append(current)
            current = sub
    if current is not None:
        components.append(current)

    shadows = []
    for lo, hi in components:
        assert lo < hi, "components of an open set have positive width"
        entry = g.right_limit(lo)
        roof = _roof(g, hi)
        shadows.append(ShadowCheck(start=lo, end=hi, entry_limit=entry,
                                   roof=roof, holds=entry <= roof))
    return SunResult(components=tuple(components), shadows=tuple(shadows))


@dataclass(frozen=True)
class ComponentBound:
    start: ExactNumber
    end: ExactNumber
    scaled_width: ExactNumber     # c * (end - start)
    rise: ExactNumber             # f(end+) - f(start+)
    holds: bool


@dataclass(frozen=True)
class SunBoundResult:
    components: tuple[tuple[ExactNumber, ExactNumber], ...]
    mu: ExactNumber
    bound: ExactNumber
    per_component: tuple[ComponentBound, ...]
    holds: bool


def sun_measure_bound(f: PLFunction, c) -> SunBoundResult:
    """Rising-sun length bound for a nondecreasing f and a slope c > 0.

    Applies the sweep to f(x) - c x; the total length of the resulting
    components is at most (f(b) - f(a)) / c, and each component separately
    satisfies c * width <= rise of f across it.  Both checked exactly.
    """
    c = ExactNumber.coerce(c)
    if c.sign() <= 0:
        raise ValueError("c must be positive")
    if not f.is_nondecreasing():
        raise NotMonotone("sun_measure_bound needs a nondecreasing function")
    sun = rising_sun(f.add_linear(0, -c))
    a, b = f.domain
    bound = (f.eval(b) - f.eval(a)) / c
    per = []
    total = ExactNumber(0)
    for lo, hi in sun.components:
        width = hi - lo
        total = total + width
        rise = f.right_limit_or_value(hi) - f.right_limit_or_value(lo)
        per.append(ComponentBound(start=lo, end=hi,
                                  scaled_width=c * width, rise=rise,
                                  holds=c * width <= rise))
    result = SunBoundResult(components=sun.components, mu=total, bound=bound,
                            per_component=tuple(per),
                            holds=total <= bound and all(p.holds for p in per))
    if not result.holds:
        raise VerificationError(
            f"rising-sun bound failed: mu = {total}, bound = {bound}")
    return result


# -- monotone inverse -----------------------------------------------------------

def monotone_inverse(f: PLFunction) -> PLFunction:
    """Continuous nondecreasing inverse of a strictly increasing function:
    y -> sup of {t : f(t) <= y}.  Jumps of f become flat pieces.

    The round trip F(f(x)) = x is re-verified at every breakpoint and at
    piece midpoints before returning.
    """
    if not f.is_strictly_increasing():
        raise NotStrictlyIncreasing("monotone_inverse needs strict increase")
    ypts: list[tuple[ExactNumber, ExactNumber, ExactNumber]] = []
    for p in f.points:
        if p.left == p.right:
            ypts.append((p.right, p.x, p.x))
        else:
            ypts.append((p.left, p.x, p.x))
            ypts.append((p.right, p.x, p.x))
    inverse = PLFunction(ypts)
    assert all(q.left == q.right for q in inverse.points), \
        "inverse must be continuous"
    assert inverse.is_nondecreasing()
    probes = list(f.breakpoints)
    for p, q in zip(f.points, f.points[1:]):
        probes.append((p.x + q.x) / 2)
    for x in probes:
        if inverse.eval(f.eval(x)) != x:
            raise VerificationError(f"inverse round trip failed at {x}")
    return inverse


# -- differentiability survey ------------------------------------------------------

@dataclass(frozen=True)
class CellReport:
    lo: ExactNumber
    hi: ExactNumber
    witness: ExactNumber
    derivative: ExactNumber


@dataclass(frozen=True)
class NonDiffPoint:
    x: ExactNumber
    values: DiniValues


@dataclass(frozen=True)
class DifferentiabilityReport:
    mesh: ExactNumber
    cells: tuple[CellReport, ...]
    nondifferentiable: tuple[NonDiffPoint, ...]
    all_cells_pass: bool


def differentiability_report(f: PLFunction, mesh) -> DifferentiabilityReport:
    """Split the domain into mesh-width cells and exhibit, in each, a point
    where all four Dini derivatives agree and are finite.

    For a PL function the witnesses always exist (breakpoints are finite),
    so the survey doubles as an exact certificate; interior points where
    the four values disagree are listed separately.
    """
    mesh = ExactNumber.coerce(mesh)
    if mesh.sign() <= 0:
        raise ValueError("mesh must be positive")
    a, b = f.domain
    cells = []
    k = 0
    while True:
        lo = a + mesh * k
        if lo >= b:
            break
        hi = lo + mesh
        if hi > b:
            hi = b
        inner = [p.x for p in f.points if lo < p.x < hi]
        marks = [lo] + inner + [hi]
        best = None
        for u, v in zip(marks, marks[1:]):
            if best is None or v - u > best[1] - best[0]:
                best = (u, v)
        witness = (best[0] + best[1]) / 2
        values = dini(f, witness)
        if not values.all_equal_finite():
            raise VerificationError(
                f"cell [{lo}, {hi}] witness {witness} is not a point of "
                f"differentiability")
        cells.append(CellReport(lo=lo, hi=hi, witness=witness,
                                derivative=values.lower_left))
        k += 1
    bad = []
    for p in f.points[1:-1]:
        values = dini(f, p.x)
        if not values.all_equal_finite():
            bad.append(NonDiffPoint(x=p.x, values=values))
    return DifferentiabilityReport(mesh=mesh, cells=tuple(cells),
                                   nondifferentiable=tuple(bad),
                                   all_cells_pass=True)


# -- factorial power series ---------------------------------------------------------

@dataclass(frozen=True)
class SeriesCheck:
    order: int
    coefficients: tuple[int, ...]   # a_1 .. a_order, with a_n = (n-1)!
    holds: bool


def factorial_series_check(order: int) -> SeriesCheck:
    """Verify coefficientwise, up to the given order, that the power series
    with a_n = (n-1)! solves f(x) = x^2 f'(x) + x with f(0) = 0, f'(0) = 1.

    The right side has [x^1] = 1 from the bare x, and
    [x^m] = (m-1) * a_{m-1} for m >= 2; both must reproduce a_m.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs = [1]                 # a_1 = 0! = 1
    for n in range(2, order + 1):
        coeffs.append(coeffs[-1] * (n - 1))
    if coeffs[0] != 1:
        raise VerificationError("a_1 must be 1")
    for m in range(2, order + 1):
        lhs = coeffs[m - 1]
        rhs = (m - 1) * coeffs[m - 2]
        if lhs != rhs:
            raise VerificationError(f"identity fails at order {m}")
    return SeriesCheck(order=order, coefficients=tuple(coeffs), holds=True)
