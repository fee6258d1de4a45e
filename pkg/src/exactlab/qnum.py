"""Exact arithmetic over the rationals and real quadratic extensions.

An :class:`ExactNumber` is a value ``(p + q*sqrt(m)) / den`` with integer
``p, q, den`` and a square-free radicand ``m`` (``m = 0`` encodes a pure
rational, with ``q`` forced to zero).  All operations are exact; every
comparison is decided by integer sign logic, never by rounding.  Two
irrational operands must share the same radicand; a rational operand
combines with anything.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Union

from .errors import DivisionByZero, RadicandMismatch

Rationalish = Union[int, Fraction]


def _sign_pair(p: int, q: int, m: int) -> int:
    """Sign of p + q*sqrt(m), by case analysis on the coefficient signs."""
    if q == 0:
        return (p > 0) - (p < 0)
    if p == 0:
        return (q > 0) - (q < 0)
    if p > 0 and q > 0:
        return 1
    if p < 0 and q < 0:
        return -1
    lhs = p * p
    rhs = q * q * m
    if p > 0:  # q < 0: positive iff p^2 > q^2 m
        return (lhs > rhs) - (lhs < rhs)
    return (rhs > lhs) - (rhs < lhs)


@lru_cache(maxsize=None)
def _check_radicand(m: int) -> None:
    if m < 0:
        raise ValueError(f"radicand must be non-negative, got {m}")
    if m in (0, 1):
        return
    if m % 4 == 0:
        raise ValueError(f"radicand must be square-free, got {m}")
    p = 3
    while p * p <= m:
        if m % (p * p) == 0:
            raise ValueError(f"radicand must be square-free, got {m}")
        p += 2


class ExactNumber:
    """An exactly represented element of Q or Q(sqrt(m))."""

    __slots__ = ("p", "q", "den", "m")

    def __init__(self, a: Rationalish = 0, b: Rationalish = 0, m: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        _check_radicand(m)
        if m == 1:
            # sqrt(1) folds into the rational part
            a, b, m = a + b, Fraction(0), 0
        if m == 0:
            b = Fraction(0)
        den = a.denominator * b.denominator
        p = a.numerator * b.denominator
        q = b.numerator * a.denominator
        self._install(p, q, den, m)

    def _install(self, p: int, q: int, den: int, m: int) -> None:
        if den == 0:
            raise DivisionByZero("zero denominator")
        if q == 0:
            m = 0
        if den < 0:
            p, q, den = -p, -q, -den
        g = gcd(gcd(abs(p), abs(q)), den)
        if g > 1:
            p //= g
            q //= g
            den //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name, value):
        raise AttributeError("ExactNumber is immutable")

    @classmethod
    def _raw(cls, p: int, q: int, den: int, m: int) -> "ExactNumber":
        self = object.__new__(cls)
        self._install(p, q, den, m)
        return self

    # -- constructors ---------------------------------------------------

    @classmethod
    def sqrt(cls, m: int) -> "ExactNumber":
        _check_radicand(m)
        if m in (0, 1):
            return cls._raw(m, 0, 1, 0)
        return cls._raw(0, 1, 1, m)

    @classmethod
    def coerce(cls, value) -> "ExactNumber":
        if isinstance(value, ExactNumber):
            return value
        if isinstance(value, (int, Fraction)):
            f = Fraction(value)
            return cls._raw(f.numerator, 0, f.denominator, 0)
        if isinstance(value, str):
            return parse_exact(value)
        raise TypeError(f"cannot interpret {value!r} as an ExactNumber")

    # -- predicates -----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_integer(self) -> bool:
        return self.q == 0 and self.den == 1

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.den)

    def sign(self) -> int:
        """Exact sign of the value: -1, 0 or 1."""
        return _sign_pair(self.p, self.q, self.m)

    # -- arithmetic -----------------------------------------------------

    def _merged_m(self, other: "ExactNumber") -> int:
        if self.q != 0 and other.q != 0 and self.m != other.m:
            raise RadicandMismatch(
                f"cannot combine sqrt({self.m}) with sqrt({other.m})")
        return self.m if self.q != 0 else other.m

    def __add__(self, other) -> "ExactNumber":
        other = ExactNumber.coerce(other)
        m = self._merged_m(other)
        return ExactNumber._raw(
            self.p * other.den + other.p * self.den,
            self.q * other.den + other.q * self.den,
            self.den * other.den, m)

    __radd__ = __add__

    def __neg__(self) -> "ExactNumber":
        return ExactNumber._raw(-self.p, -self.q, self.den, self.m)

    def __sub__(self, other) -> "ExactNumber":
        return self + (-ExactNumber.coerce(other))

    def __rsub__(self, other) -> "ExactNumber":
        return ExactNumber.coerce(other) + (-self)

    def __mul__(self, other) -> "ExactNumber":
        other = ExactNumber.coerce(other)
        m = self._merged_m(other)
        p = self.p * other.p + self.q * other.q * m
        q = self.p * other.q + self.q * other.p
        return ExactNumber._raw(p, q, self.den * other.den, m)

    __rmul__ = __mul__

    def inverse(self) -> "ExactNumber":
        if self.p == 0 and self.q == 0:
            raise DivisionByZero("inverse of zero")
        if self.q == 0:
            return ExactNumber._raw(self.den, 0, self.p, 0)
        norm = self.p * self.p - self.q * self.q * self.m
        # norm != 0: otherwise sqrt(m) would be rational
        return ExactNumber._raw(self.den * self.p, -self.den * self.q, norm, self.m)

    def __truediv__(self, other) -> "ExactNumber":
        return self * ExactNumber.coerce(other).inverse()

    def __rtruediv__(self, other) -> "ExactNumber":
        return ExactNumber.coerce(other) * self.inverse()

    def __abs__(self) -> "ExactNumber":
        return -self if self.sign() < 0 else self

    # -- order ----------------------------------------------------------

    def compare(self, other) -> int:
        """Exact three-way comparison: sign of ``self - other``.

        Works on cross-multiplied raw coefficients; no normalization needed
        for a sign, so this stays cheap in search loops.
        """
        other = ExactNumber.coerce(other)
        if self.q != 0 and other.q != 0 and self.m != other.m:
            raise RadicandMismatch(
                f"cannot compare sqrt({self.m}) with sqrt({other.m})")
        m = self.m if self.q != 0 else other.m
        a = self.p * other.den - other.p * self.den
        b = self.q * other.den - other.q * self.den
        return _sign_pair(a, b, m)

    def __eq__(self, other) -> bool:
         # canonical form makes value equality structural within one radicand
        try:
            other = ExactNumber.coerce(other)
        except TypeError:
            return NotImplemented
        if self.q != 0 and other.q != 0 and self.m != other.m:
            return False
        return (self.p, self.q, self.den) == (other.p, other.q, other.den)

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.den))
        return hash((self.p, self.q, self.den, self.m))

    def __bool__(self) -> bool:
        return self.p != 0 or self.q != 0

    # -- floor ----------------------------------------------------------

    def floor(self) -> int:
        """Greatest integer <= value, decided exactly."""
        p, q, den, m = self.p, self.q, self.den, self.m
        if q == 0:
            return p // den
        s = isqrt(q * q * m)
        # s <= |q| sqrt(m) < s + 1
        if q > 0:
            n = (p + s) // den
        else:
            n = (p - s - 1) // den
        # the bracket has width < 1: at most one upward correction
        while self.compare(n + 1) >= 0:
            n += 1
        while self.compare(n) < 0:
            n -= 1
        return n

    __floor__ = floor

    def frac(self) -> "ExactNumber":
        """Fractional part, in [0, 1)."""
        return self - self.floor()

    # -- text -----------------------------------------------------------

    def __str__(self) -> str:
        if self.q == 0:
            return str(Fraction(self.p, self.den))
        rat = Fraction(self.p, self.den)
        coef = Fraction(self.q, self.den)
        tail = f"{coef}*sqrt({self.m})" if coef > 0 else f"-{-coef}*sqrt({self.m})"
        if rat == 0:
            return tail
        if coef > 0:
            return f"{rat}+{tail}"
        return f"{rat}{tail}"

    def __repr__(self) -> str:
        return f"ExactNumber('{self}')"

    def __float__(self) -> float:
        # convenience for debugging only; never used in library logic
        if self.q == 0:
            return self.p / self.den
        return (self.p + self.q * self.m ** 0.5) / self.den


_TERM_RE = re.compile(
    r"""^(?:
        (?P<coef>[+-]?\d+(?:/\d+)?)\*sqrt\((?P<m1>\d+)\)
      | (?P<sign>[+-]?)sqrt\((?P<m2>\d+)\)
      | (?P<rat>[+-]?\d+(?:/\d+)?)
    )$""",
    re.VERBOSE,
)


def parse_exact(text: str) -> ExactNumber:
    """Parse the textual format: ``p/q`` or ``p/q+r/s*sqrt(m)``.

    Whitespace-insensitive; also accepts bare ``sqrt(m)`` terms.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("empty number")
    terms = _split_terms(compact)
    rat = Fraction(0)
    coef = Fraction(0)
    m = 0
    for term in terms:
        match = _TERM_RE.match(term)
        if match is None:
            raise ValueError(f"cannot parse number {text!r}")
        if match.group("rat") is not None:
            rat += Fraction(match.group("rat"))
            continue
        if match.group("coef") is not None:
            c = Fraction(match.group("coef"))
            tm = int(match.group("m1"))
        else:
            c = Fraction(-1 if match.group("sign") == "-" else 1)
            tm = int(match.group("m2"))
        if tm in (0, 1):
            rat += c * tm
            continue
        if m == 0:
            m = tm
        elif m != tm:
            raise RadicandMismatch(f"mixed radicands in {text!r}")
        coef += c
    return ExactNumber(rat, coef, m)


def _split_terms(compact: str) -> list[str]:
    terms = []
    depth = 0
    start = 0
    for i, ch in enumerate(compact):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > start:
            prev = compact[i - 1]
            if prev not in "*/+-":
                terms.append(compact[start:i])
                start = i
    terms.append(compact[start:])
    return [t for t in terms if t]


def exact(value) -> ExactNumber:
    """Shorthand coercion from int, Fraction or text."""
    return ExactNumber.coerce(value)


ZERO = ExactNumber(0)
ONE = ExactNumber(1)

#: the golden ratio (1 + sqrt(5)) / 2
PHI = ExactNumber(Fraction(1, 2), Fraction(1, 2), 5)
SQRT2 = ExactNumber.sqrt(2)
SQRT3 = ExactNumber.sqrt(3)
