"""Sequence coding: one natural number (or one real) can carry a whole
sequence, with exact round trips.
"""

from fractions import Fraction as F

from exactlab import (
    CallableOracle, CodedReal, DiscreteSet, PHI, SQRT2,
    beta, beta_encode, cantor_pair, cantor_unpair,
    cf_decode, cf_digits, cf_encode, discrete_sum,
    interleave_encode, interleave_row, primitive_recursion, sum_commutes,
)

print("-- pairing --")
print("pair(1, 2)           =", cantor_pair(1, 2))
print("unpair(8)            =", cantor_unpair(8))

print()
print("-- one natural codes a whole sequence (Goedel beta) --")
k = beta_encode([3, 1, 4, 1, 5])
print("code for [3,1,4,1,5] =", k)
print("decoded              =", [beta(k, i) for i in range(5)])

print()
print("-- continued fractions, exactly --")
print("digits of 7/3        =", cf_digits(F(7, 3), 2))
print("digits of phi        =", cf_digits(PHI, 12), " (all ones, forced)")
print("digits of sqrt(2)    =", cf_digits(SQRT2, 12), " (period 2)")
coded = cf_encode([3, 1, 4, 1, 5])
print("encode [3,1,4,1,5]   -> value", coded.value, "digits", coded.tower)
print("decode again         =", cf_decode(coded))

print()
print("-- a family of reals interleaved into one digit stream --")
members = [CodedReal.from_value(F(1, 2)), CodedReal.from_value(F(2, 3)),
           CodedReal.from_value(F(3, 4))]
packed = interleave_encode(members)
print("packed value         =", packed.value)
for i in range(3):
    print(f"row {i} recovered      =", interleave_row(packed, i).value)

print()
print("-- primitive recursion with a decodable certificate --")
value, cert = primitive_recursion(lambda a: a, lambda a, v: v + a, 3, 5,
                                  certificate=True)
print("f(3, 5)              =", value)
print("orbit from the code  =", [beta(cert, i) for i in range(6)])

print()
print("-- exact summation over a discrete set --")
D = DiscreteSet.naturals(3)
ident = CallableOracle(lambda x: x)
print("sum 0..3             =", discrete_sum(D, ident))
equal, lhs, rhs = sum_commutes(D, ident, {0: 3, 1: 2, 2: 1, 3: 0})
print("reversed order       =", rhs, " equal:", equal)
