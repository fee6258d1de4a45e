"""Discrete sets and the unit-step segment calculus.

A nat segment is {0, 1, ..., n} living inside the field; an approximate
segment relaxes gaps and endpoints to a strict tolerance.  Small shifts
preserve approximate segments at three times the tolerance - checked
exactly, which is what the extraction pipeline leans on.
"""

from fractions import Fraction as F

from exactlab import (
    DiscreteSet, PHI, RotationOracle, TableOracle, GrowableSet,
    image, is_approx_segment, is_nat_segment, perturb,
    segment_order, segment_union,
)

print("-- discrete sets --")
D = DiscreteSet.parse("{0, 1/3, 1/2, 2}")
print("D                    =", D)
print("successor of 1/3     =", D.successor(F(1, 3)))
print("restrict to 3/2      =", D.restrict(F(3, 2)))
print("dist(D, 1)           =", D.dist(1))

print()
print("-- images under an oracle are again sorted exact sets --")
rot = RotationOracle(PHI)
img = image(DiscreteSet.naturals(4), rot)
print("frac(n*phi), n<=4    =", img)
print("min / max achieved   =", img.min(), "/", img.max())

print()
print("-- segments are totally ordered and closed under union --")
A, B = DiscreteSet.naturals(2), DiscreteSet.naturals(5)
print(f"order({A}, {B}) =", segment_order(A, B).value)
print("union                =", segment_union([A, B]))
print("is_nat_segment       =", is_nat_segment(segment_union([A, B])))

print()
print("-- approximate segments survive small shifts --")
base = DiscreteSet.naturals(2)
shifts = TableOracle({0: F(1, 20), 1: F(-1, 20), 2: F(2, 25)})
moved = perturb(base, shifts, F(1, 10), 2)
print("shifted set          =", moved)
print("passes 3/10-check    =", is_approx_segment(moved, F(3, 10), 2))

print()
print("-- growable sets stop loudly at their budget --")
G = GrowableSet(cap=100)
prefix = G.grow(lambda p: p.max() > 0 and rot.eval(p.max()) < F(1, 50))
print("first n >= 1 with frac(n*phi) < 1/50:", prefix.max())
