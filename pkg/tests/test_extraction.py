from fractions import Fraction as F

import pytest

from exactlab import (
    DiscreteSet,
    GrowableSet,
    PHI,
    RotationOracle,
    SQRT2,
    SQRT3,
    TableOracle,
    approximate_target,
    bootstrap,
    exact,
    extend_step,
    extract,
    is_approx_segment,
    trace_report,
)
from exactlab.errors import (
    CapExceeded,
    DegenerateOracle,
    EmptySet,
    PreconditionFailed,
    TargetBelowOne,
)


def test_bootstrap_phi_exact():
    fam = bootstrap(GrowableSet(), RotationOracle(PHI), F(1, 10))
    assert fam.yset == DiscreteSet([0, F(21, 20)])
    assert fam.a == (PHI - 1) * 20 / 21
    assert fam.b == fam.a
    assert fam.d == exact(1)
    assert is_approx_segment(fam.yset, F(1, 10), 1)


def test_bootstrap_unit_table():
    f = TableOracle({0: 0, 1: 1})
    fam = bootstrap(GrowableSet(cap=1), f, F(1, 10))
    assert fam.a == exact(F(20, 21))
    assert fam.yset == DiscreteSet([0, F(21, 20)])


def test_bootstrap_degenerate_oracle():
    with pytest.raises(DegenerateOracle):
        bootstrap(GrowableSet(cap=1), TableOracle({0: 3, 1: 3}), F(1, 10))


def test_bootstrap_handles_descending_first_values():
    fam = bootstrap(GrowableSet(cap=1), TableOracle({0: 1, 1: 0}), F(1, 10))
    assert fam.yset == DiscreteSet([0, F(21, 20)])


def test_extend_step_from_small_bootstrap():
    G = GrowableSet()
    rot = RotationOracle(PHI)
    prev = bootstrap(G, rot, F(1, 60))
    fam = extend_step(G, rot, prev, 1, F(1, 10))
    assert len(fam.yset) == 3
    assert is_approx_segment(fam.yset, F(1, 10), 2)
    for y, target in zip(fam.yset, (0, 1, 2)):
        assert abs(y - target) < exact(F(1, 10))


def test_extend_step_precondition():
    G = GrowableSet()
    rot = RotationOracle(PHI)
    prev = bootstrap(G, rot, F(1, 10))  # too loose to feed an eps=1/10 step
    with pytest.raises(PreconditionFailed):
        extend_step(G, rot, prev, 1, F(1, 10))


def test_extend_step_budget():
    G = GrowableSet(cap=3)
    rot = RotationOracle(PHI)
    prev = bootstrap(G, rot, F(1, 60))
    with pytest.raises(CapExceeded):
        extend_step(G, rot, prev, 1, F(1, 10))


def test_extract_single_step_is_bootstrap():
    trace = extract(GrowableSet(), RotationOracle(PHI), 1, F(1, 4))
    assert len(trace.steps) == 1
    assert trace.steps[0].fam.yset == DiscreteSet([0, F(9, 8)])


def test_extract_schedule_and_soundness_phi():
    trace = extract(GrowableSet(), RotationOracle(PHI), 3, F(1, 4))
    assert [s.eps for s in trace.steps] == \
        [exact(F(1, 144)), exact(F(1, 24)), exact(F(1, 4))]
    for step in trace.steps:
        # the independent checker, never the construction's own word
        assert is_approx_segment(step.fam.yset, step.eps, step.n)
        assert len(step.fam.yset) == step.n + 1
    final = trace.final.yset
    assert len(final) == 4
    for y, target in zip(final, range(4)):
        assert abs(y - target) < exact(F(1, 4))


def test_extract_sqrt2():
    trace = extract(GrowableSet(), RotationOracle(SQRT2), 2, F(1, 5))
    for step in trace.steps:
        assert is_approx_segment(step.fam.yset, step.eps, step.n)
    for y, target in zip(trace.final.yset, range(3)):
        assert abs(y - target) < exact(F(1, 5))


def test_extract_growth_is_strict():
    trace = extract(GrowableSet(), RotationOracle(SQRT3), 3, F(1, 4))
    indices = [s.d_index for s in trace.steps]
    assert indices == sorted(indices)
    assert all(x < y for x, y in zip(indices, indices[1:]))


def test_extract_deterministic():
    runs = [trace_report(extract(GrowableSet(), RotationOracle(PHI), 3, F(1, 4)))
            for _ in range(2)]
    assert runs[0] == runs[1]


def test_extract_tolerance_chain():
    # a set passing at eps also passes at any larger tolerance
    trace = extract(GrowableSet(), RotationOracle(PHI), 2, F(1, 4))
    for step in trace.steps:
        for loosen in (2, 6, 24):
            assert is_approx_segment(step.fam.yset, step.eps * loosen, step.n)


def test_extract_rejects_bad_arguments():
    with pytest.raises(ValueError):
        extract(GrowableSet(), RotationOracle(PHI), 0, F(1, 4))
    with pytest.raises(ValueError):
        extract(GrowableSet(), RotationOracle(PHI), 2, F(-1, 4))


def test_extract_dense_table_oracle():
    # a hand-built table, dense enough in [0, 1), supports one extension;
    # ternary denominators keep exact midpoints off the image
    values = {}
    k = 0
    for stage in range(1, 9):
        for num in range(1, 3 ** stage):
            if num % 3:
                values[k] = F(num, 3 ** stage)
                k += 1
    oracle = TableOracle(values)
    G = GrowableSet(cap=len(values) - 1)
    trace = extract(G, oracle, 2, F(1, 2))
    for step in trace.steps:
        assert is_approx_segment(step.fam.yset, step.eps, step.n)


def test_extension_starves_on_midpoint_closed_image():
    # every dyadic midpoint is itself a table value, so the canonical
    # midpoint cut keeps colliding until the finite table is exhausted;
    # the failure is a loud budget error, never a silent truncation
    values = {}
    k = 0
    for stage in range(1, 13):
        for num in range(1, 2 ** stage, 2):
            values[k] = F(num, 2 ** stage)
            k += 1
    G = GrowableSet(cap=len(values) - 1)
    with pytest.raises(CapExceeded):
        extract(G, TableOracle(values), 2, F(1, 2))


def test_approximate_target_integer_targets():
    fam = approximate_target(GrowableSet(), RotationOracle(PHI),
                             DiscreteSet([1, 2, 3]), F(1, 4))
    goal = DiscreteSet([0, 1, 2, 3])
    assert len(fam.yset) == 4
    for y in fam.yset:
        assert goal.dist(y) < exact(F(1, 4))
    for t in goal:
        assert fam.yset.dist(t) < exact(F(1, 4))


def test_approximate_target_single_fraction():
    fam = approximate_target(GrowableSet(), RotationOracle(PHI),
                             DiscreteSet([F(3, 2)]), F(1, 10))
    assert len(fam.yset) == 2
    assert fam.yset.dist(F(3, 2)) < exact(F(1, 10))


def test_approximate_target_mixed_fractions_sqrt2():
    fam = approximate_target(GrowableSet(), RotationOracle(SQRT2),
                             DiscreteSet([F(3, 2), F(5, 2)]), F(1, 5))
    goal = DiscreteSet([0, F(3, 2), F(5, 2)])
    for t in goal:
        assert fam.yset.dist(t) < exact(F(1, 5))
    for y in fam.yset:
        assert goal.dist(y) < exact(F(1, 5))


def test_approximate_target_rejects_below_one():
    with pytest.raises(TargetBelowOne):
        approximate_target(GrowableSet(), RotationOracle(PHI),
                           DiscreteSet([F(1, 2)]), F(1, 10))
    with pytest.raises(EmptySet):
        approximate_target(GrowableSet(), RotationOracle(PHI),
                           DiscreteSet([]), F(1, 10))


def test_trace_report_shape():
    trace = extract(GrowableSet(), RotationOracle(PHI), 2, F(1, 4))
    lines = trace_report(trace)
    assert lines[0].startswith("oracle=")
    assert lines[2] == "steps=2"
    assert all(line.endswith("check=pass") for line in lines[3:])
