"""Piecewise-linear functions with jump discontinuities, exactly represented.

A function is a sorted list of breakpoints, each carrying a left limit and
a right limit; between consecutive breakpoints the graph is the segment
from one right limit to the next left limit.  Evaluation at a breakpoint
returns the right limit (at the domain's right end that slot simply holds
the value).  First and last breakpoints are the domain.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import OutOfDomain
from .qnum import ExactNumber, exact


@dataclass(frozen=True)
class Breakpoint:
    x: ExactNumber
    left: ExactNumber   # limit from below (meaningless at the domain min)
    right: ExactNumber  # limit from above; also the value at the point


class PLFunction:
    """Exact piecewise-linear function on a closed interval."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable):
        pts = []
        for entry in points:
            if isinstance(entry, Breakpoint):
                pts.append(entry)
            else:
                x, left, right = entry
                pts.append(Breakpoint(ExactNumber.coerce(x),
                                      ExactNumber.coerce(left),
                                      ExactNumber.coerce(right)))
        if len(pts) < 2:
            raise ValueError("need at least two breakpoints")
        for a, b in zip(pts, pts[1:]):
            if a.x.compare(b.x) >= 0:
                raise ValueError("breakpoints must be strictly increasing")
        first = pts[0]
        pts[0] = Breakpoint(first.x, first.right, first.right)
        object.__setattr__(self, "points", tuple(pts))

    def __setattr__(self, name, value):
        raise AttributeError("PLFunction is immutable")

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_values(cls, pairs: Sequence) -> "PLFunction":
        """Continuous interpolant through (x, value) pairs."""
        return cls([(x, v, v) for x, v in pairs])

    @classmethod
    def linear(cls, a, b, slope, intercept=0) -> "PLFunction":
        a, b = ExactNumber.coerce(a), ExactNumber.coerce(b)
        slope = ExactNumber.coerce(slope)
        intercept = ExactNumber.coerce(intercept)
        return cls.from_values([(a, slope * a + intercept),
                                (b, slope * b + intercept)])

    @classmethod
    def constant(cls, a, b, value) -> "PLFunction":
        return cls.linear(a, b, 0, value)

    @classmethod
    def step_function(cls, a, b, jumps: Sequence, start=0) -> "PLFunction":
        """Flat function jumping by the given heights at the given points.

        ``jumps`` is a sequence of (x, height) with a < x <= b.
        """
        a, b = ExactNumber.coerce(a), ExactNumber.coerce(b)
        level = ExactNumber.coerce(start)
        pts = [(a, level, level)]
        for x, h in sorted((ExactNumber.coerce(x), ExactNumber.coerce(h))
                           for x, h in jumps):
            if not a < x <= b:
                raise ValueError(f"jump at {x} outside ({a}, {b}]")
            pts.append((x, level, level + h))
            level = level + h
        if pts[-1][0] != b:
            pts.append((b, level, level))
        return cls(pts)

    @classmethod
    def cantor_staircase(cls, depth: int) -> "PLFunction":
        """Finite middle-thirds staircase on [0, 1]: the depth-0 stage is the
        identity; each stage squeezes two half-size copies around a flat
        middle third."""
        if depth < 0:
            raise ValueError("depth must be >= 0")
        xs = [Fraction(0), Fraction(1)]
        ys = [Fraction(0), Fraction(1)]
        for _ in range(depth):
            nxs, nys = [], []
            for x, y in zip(xs, ys):
                nxs.append(x / 3)
                nys.append(y / 2)
            if nxs[-1] != Fraction(1, 3):
                nxs.append(Fraction(1, 3))
                nys.append(Fraction(1, 2))
            nxs.append(Fraction(2, 3))
            nys.append(Fraction(1, 2))
            for x, y in zip(xs, ys):
                if x == 0:
                    continue  # 2/3 already emitted
                nxs.append(Fraction(2, 3) + x / 3)
                nys.append(Fraction(1, 2) + y / 2)
            xs, ys = nxs, nys
        return cls.from_values(list(zip(xs, ys)))

    # -- basic queries ----------------------------------------------------

    @property
    def domain(self) -> tuple[ExactNumber, ExactNumber]:
        return (self.points[0].x, self.points[-1].x)

    @property
    def breakpoints(self) -> tuple[ExactNumber, ...]:
        return tuple(p.x for p in self.points)

    def _locate(self, x: ExactNumber) -> int:
        """Largest index i with points[i].x <= x."""
        xs = [p.x for p in self.points]
        i = bisect.bisect_right(xs, x) - 1
        return i

    def _check_domain(self, x: ExactNumber) -> None:
        a, b = self.domain
        if x < a or x > b:
            raise OutOfDomain(f"{x} outside [{a}, {b}]")

    def slope(self, i: int) -> ExactNumber:
        """Slope of the piece between breakpoints i and i+1."""
        p, q = self.points[i], self.points[i + 1]
        return (q.left - p.right) / (q.x - p.x)

    def eval(self, x) -> ExactNumber:
        x = ExactNumber.coerce(x)
        self._check_domain(x)
        i = self._locate(x)
        p = self.points[i]
        if p.x == x:
            return p.right
        return p.right + self.slope(i) * (x - p.x)

    __call__ = eval

    def left_limit(self, x) -> ExactNumber:
        x = ExactNumber.coerce(x)
        self._check_domain(x)
        if x == self.points[0].x:
            raise OutOfDomain("no left limit at the domain minimum")
        i = self._locate(x)
        p = self.points[i]
        if p.x == x:
            return p.left
        return p.right + self.slope(i) * (x - p.x)

    def right_limit(self, x) -> ExactNumber:
        x = ExactNumber.coerce(x)
        self._check_domain(x)
        if x == self.points[-1].x:
            raise OutOfDomain("no right limit at the domain maximum")
        i = self._locate(x)
        p = self.points[i]
        if p.x == x:
            return p.right
        return p.right + self.slope(i) * (x - p.x)

    def right_limit_or_value(self, x) -> ExactNumber:
        """Right limit, falling back to the value at the domain maximum."""
        x = ExactNumber.coerce(x)
        if x == self.points[-1].x:
            return self.points[-1].right
        return self.right_limit(x)

    # -- shape predicates --------------------------------------------------

    def is_nondecreasing(self) -> bool:
        for i in range(len(self.points) - 1):
            if self.slope(i).sign() < 0:
                return False
        for p in self.points:
            if p.right < p.left:
                return False
        return True

    def is_strictly_increasing(self) -> bool:
        if not self.is_nondecreasing():
            return False
        return all(self.slope(i).sign() > 0
                   for i in range(len(self.points) - 1))

    # -- transforms ---------------------------------------------------------

    def add_linear(self, intercept, slope) -> "PLFunction":
        """Pointwise sum with ``intercept + slope * x``."""
        intercept = ExactNumber.coerce(intercept)
        slope = ExactNumber.coerce(slope)
        return PLFunction([(p.x,
                            p.left + intercept + slope * p.x,
                            p.right + intercept + slope * p.x)
                           for p in self.points])

    # -- text format ----------------------------------------------------------

    def to_text(self) -> str:
        a, b = self.domain
        lines = [f"domain {a} {b}"]
        for p in self.points:
            lines.append(f"{p.x} {p.left} {p.right}")
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "PLFunction":
        """Parse the line format: a ``domain a b`` header, then one
        ``x left right`` line per breakpoint."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if not lines or not lines[0].startswith("domain"):
            raise ValueError("missing 'domain a b' header")
        header = lines[0].split()
        if len(header) != 3:
            raise ValueError("domain header needs exactly two endpoints")
        a, b = exact(header[1]), exact(header[2])
        pts = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 3:
                raise ValueError(f"breakpoint line needs 3 fields: {ln!r}")
            pts.append(tuple(exact(t) for t in parts))
        fn = cls(pts)
        if fn.domain != (a, b):
            raise ValueError("breakpoints do not match the declared domain")
        return fn

    def __repr__(self) -> str:
        a, b = self.domain
        return f"PLFunction([{a}, {b}], {len(self.points)} breakpoints)"
