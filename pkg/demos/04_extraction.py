"""The extraction pipeline: growing approximate integer segments.

Each step adjoins one ratio, placed exactly on the next integer, while a
closed-form window argument keeps every earlier ratio nearly still.  All
choices are canonical, so reruns are bit-identical.  The search cost
compounds fast: with the default tolerance schedule, three steps is the
practical depth for rotation oracles at a million-index budget.
"""

import time
from fractions import Fraction as F

from exactlab import (
    DiscreteSet, GrowableSet, PHI, RotationOracle, SQRT2,
    approximate_target, extract, is_approx_segment, trace_report,
)
from exactlab.errors import CapExceeded

print("-- three-step extraction for frac(n*phi) at final tolerance 1/4 --")
started = time.monotonic()
trace = extract(GrowableSet(), RotationOracle(PHI), 3, F(1, 4))
for line in trace_report(trace):
    print(line)
print(f"({time.monotonic() - started:.2f}s; every step re-checked: ",
      all(is_approx_segment(s.fam.yset, s.eps, s.n) for s in trace.steps),
      ")", sep="")

print()
print("-- the same machinery aims at arbitrary targets >= 1 --")
fam = approximate_target(GrowableSet(), RotationOracle(SQRT2),
                         DiscreteSet([F(3, 2), F(5, 2)]), F(1, 5))
print("targets {3/2, 5/2}   ->", fam.yset)
print("largest miss         =",
      max(max(fam.yset.dist(t) for t in DiscreteSet([0, F(3, 2), F(5, 2)])),
          max(DiscreteSet([0, F(3, 2), F(5, 2)]).dist(y) for y in fam.yset)))

print()
print("-- budgets fail loudly, never silently --")
try:
    extract(GrowableSet(cap=50), RotationOracle(PHI), 3, F(1, 4))
except CapExceeded as err:
    print("CapExceeded:", err)
