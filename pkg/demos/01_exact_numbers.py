"""Tour of exact quadratic arithmetic.

Every value is (p + q*sqrt(m))/den with arbitrary-precision integers, so
each comparison below is a theorem, not a float coincidence.
"""

from fractions import Fraction

from exactlab import ExactNumber, PHI, SQRT2, exact, parse_exact

print("-- construction --")
half = exact(Fraction(1, 2))
print("1/2                  ->", half)
print("sqrt(2)              ->", SQRT2)
print("golden ratio phi     ->", PHI)
print("parsed               ->", parse_exact("2 - 3/4 * sqrt(7)"))

print()
print("-- arithmetic stays closed and canonical --")
x = exact(2) + ExactNumber.sqrt(5)
y = (exact(-3) + 2 * ExactNumber.sqrt(5)) / 7
print(f"({x}) + ({y}) =", x + y)
print("phi * (phi - 1)      =", PHI * (PHI - 1), "   (the defining identity)")
print("1 / phi              =", PHI.inverse())

print()
print("-- comparisons are decided by integer sign logic --")
print("phi vs 8/5           :", PHI.compare(Fraction(8, 5)), " (phi is larger: 5*25 > 121)")
print("7/5 vs sqrt(2)       :", exact(Fraction(7, 5)).compare(SQRT2), "(49/25 < 2)")

print()
print("-- exact floors of irrational values --")
print("floor(3 * phi)       =", (3 * PHI).floor(), "  (3 phi = 4.854...)")
print("floor(-1/2)          =", exact(Fraction(-1, 2)).floor())
print("frac(4 * phi)        =", (4 * PHI).frac())
print("floor(10^6 * sqrt2)  =", (exact(10 ** 6) * SQRT2).floor())
