"""Exact-arithmetic toolkit for discrete-set and monotone-function
experiments: quadratic-field numbers, unit-step segment calculus, a
best-approximation extraction pipeline, sequence coding, and exact
piecewise-linear analysis."""

from .qnum import PHI, SQRT2, SQRT3, ExactNumber, exact, parse_exact
from .dsets import (
    CallableOracle,
    ComposedOracle,
    DiscreteSet,
    FunctionOracle,
    GrowableSet,
    RotationOracle,
    SegmentOrder,
    TableOracle,
    ValueSet,
    image,
    is_approx_segment,
    is_nat_segment,
    perturb,
    segment_order,
    segment_union,
)
from .approx import (
    ApproxState,
    RatioFamily,
    RatioTerm,
    best_approx,
    gap_ratio,
    ratio_family,
    stability_interval,
    widen_interval,
)
from .extraction import (
    ExtractionTrace,
    TraceStep,
    approximate_target,
    bootstrap,
    extend_step,
    extract,
    trace_report,
)
from .coding import (
    CodedReal,
    beta,
    beta_encode,
    cantor_pair,
    cantor_unpair,
    cf_decode,
    cf_digits,
    cf_encode,
    discrete_sum,
    interleave_encode,
    interleave_row,
    primitive_recursion,
    sum_commutes,
)
from .plfun import Breakpoint, PLFunction
from .measure import (
    FiniteUnion,
    Interval,
    cover_mass,
    local_null_check,
    outer_measure,
    subadditivity_check,
)
from .analysis import (
    NEG_INF,
    POS_INF,
    DiniValues,
    differentiability_report,
    dini,
    factorial_series_check,
    jump_points,
    monotone_inverse,
    rising_sun,
    sun_measure_bound,
)

__version__ = "0.1.0"
