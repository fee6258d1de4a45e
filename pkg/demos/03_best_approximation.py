"""Best approximations of a cut and the gap-ratio families built on them.

For the rotation image frac(n*phi), the indices where the approach to a cut
improves carry a lot of structure; the bracket around a second cut, read at
those indices, produces ratios that the extraction pipeline steers onto
1, 2, 3, ...
"""

from fractions import Fraction as F

from exactlab import (
    DiscreteSet, PHI, RotationOracle,
    best_approx, gap_ratio, is_approx_segment, ratio_family,
    stability_interval, widen_interval,
)

rot = RotationOracle(PHI)
D = DiscreteSet.naturals(30)

print("-- best approximations of the cut 1/2 among indices <= 4 --")
state = best_approx(D, rot, F(1, 2), 4)
print("from below (L)       =", state.L)
print("from above (R)       =", state.R)
print("bracket              = (", state.l, ",", state.r, ")")

print()
print("-- the bracket is a stability interval for the cut --")
lo, hi = stability_interval(D, rot, F(1, 2), 4)
for k in (1, 2, 3):
    b = lo + (hi - lo) * F(k, 4)
    again = best_approx(D, rot, b, 4)
    print(f"cut moved to {b}: same L? {again.L == state.L}  same R? {again.R == state.R}")

print()
print("-- the ratio map turns a nested bracket into a near-integer --")
print("g(0, 1/2, 1)         =", gap_ratio(0, F(1, 2), 1))
print("g(l, 1/2, r)         =", gap_ratio(state.l, F(1, 2), state.r))

print()
print("-- the base ratio family: a two-element prefix, one exact ratio --")
a = (PHI - 1) / (1 + F(1, 120))
fam = ratio_family(DiscreteSet.naturals(1), rot, a, a, 1)
print("cut a                =", a)
print("family set           =", fam.yset)
print("admissible           =", fam.admissible)
print("1/60-segment up to 1 =", is_approx_segment(fam.yset, F(1, 60), 1))

print()
print("-- window on which every ratio moves by less than eps --")
window = widen_interval(DiscreteSet.naturals(1), rot, fam, F(1, 60), 1)
print("window around a      = (", window[0], ",", window[1], ")")
c = window[0] + (window[1] - window[0]) * F(1, 3)
moved = ratio_family(DiscreteSet.naturals(1), rot, a, c, 1)
print("moved family         =", moved.yset)
print("3*eps check          =", is_approx_segment(moved.yset, F(1, 20), 1))
