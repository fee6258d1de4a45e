from fractions import Fraction as F

import pytest

from exactlab import (
    DiscreteSet,
    PHI,
    RotationOracle,
    SQRT2,
    TableOracle,
    best_approx,
    exact,
    gap_ratio,
    is_approx_segment,
    ratio_family,
    stability_interval,
    widen_interval,
)
from exactlab.errors import (
    CutInImage,
    EmptySet,
    EpsTooLarge,
    NoLeftValue,
    NoRightValue,
    NotInJ,
)

from conftest import ROTATION_BASES


def brute_force_check(D, f, state):
    """Re-verify a best-approximation state directly from the definition."""
    elems = list(D.restrict(state.bound))
    values = {e: f.eval(e) for e in elems}
    for e in elems:
        v = values[e]
        earlier = [values[x] for x in elems if x < e]
        left_ok = v < state.cut and not any(v < w < state.cut for w in earlier)
        right_ok = v > state.cut and not any(state.cut < w < v for w in earlier)
        assert (e in state.L) == left_ok
        assert (e in state.R) == right_ok
    assert state.l == values[state.L.max()]
    assert state.r == values[state.R.max()]
    assert state.l < state.cut < state.r


def test_best_approx_rotation_example():
    D = DiscreteSet.naturals(10)
    rot = RotationOracle(PHI)
    state = best_approx(D, rot, F(1, 2), 4)
    assert list(state.L) == [exact(0), exact(2), exact(4)]
    assert list(state.R) == [exact(1)]
    assert state.l == 4 * PHI - 6
    assert state.r == PHI - 1
    brute_force_check(D, rot, state)


def test_best_approx_two_point_table():
    D = DiscreteSet([0, 1])
    f = TableOracle({0: 0, 1: 1})
    state = best_approx(D, f, F(1, 2), 1)
    assert list(state.L) == [exact(0)]
    assert list(state.R) == [exact(1)]
    assert (state.l, state.r) == (exact(0), exact(1))


def test_best_approx_one_sided_errors():
    D = DiscreteSet([0, 1])
    with pytest.raises(NoRightValue):
        best_approx(D, TableOracle({0: 0, 1: F(1, 4)}), F(1, 2), 1)
    with pytest.raises(NoLeftValue):
        best_approx(D, TableOracle({0: 2, 1: 3}), F(1, 2), 1)
    with pytest.raises(EmptySet):
        best_approx(D, TableOracle({0: 0, 1: 1}), F(1, 2), -1)


def test_best_approx_left_values_improve(rng):
    # successive left best approximations strictly improve, and symmetrically
    for base in ROTATION_BASES:
        rot = RotationOracle(base)
        D = DiscreteSet.naturals(60)
        for _ in range(20):
            cut = F(rng.randrange(1, 99), 100)
            state = best_approx(D, rot, cut, rng.randrange(3, 60))
            lvals = [rot.eval(e) for e in state.L]
            assert all(x < y for x, y in zip(lvals, lvals[1:]))
            rvals = [rot.eval(e) for e in state.R]
            assert all(x > y for x, y in zip(rvals, rvals[1:]))
            brute_force_check(D, rot, state)


def test_gap_ratio():
    assert gap_ratio(0, F(1, 2), 1) == exact(2)
    assert gap_ratio(1, 0, 2) == exact(0)
    assert gap_ratio(0, 0, 1) == exact(0)
    quad = gap_ratio(4 * PHI - 6, F(1, 2), PHI - 1)
    assert quad == (5 - 3 * PHI) / (exact(F(13, 2)) - 4 * PHI)


def test_stability_interval_examples():
    D = DiscreteSet.naturals(10)
    rot = RotationOracle(PHI)
    lo, hi = stability_interval(D, rot, F(1, 2), 4)
    assert (lo, hi) == (4 * PHI - 6, PHI - 1)
    lo, hi = stability_interval(DiscreteSet([0, 1]),
                                TableOracle({0: 0, 1: 1}), F(1, 2), 1)
    assert (lo, hi) == (exact(0), exact(1))


def test_stability_interval_rejects_image_cut():
    with pytest.raises(CutInImage):
        stability_interval(DiscreteSet.naturals(10), RotationOracle(PHI),
                           2 * PHI - 3, 4)


def test_stability_resampling(rng):
    # any cut drawn inside the interval reproduces identical L and R
    rot = RotationOracle(SQRT2)
    D = DiscreteSet.naturals(40)
    state = best_approx(D, rot, F(1, 3), 25)
    lo, hi = stability_interval(D, rot, F(1, 3), 25)
    width = hi - lo
    for k in range(1, 50):
        b = lo + width * F(k, 50)
        resampled = best_approx(D, rot, b, 25)
        assert resampled.L == state.L
        assert resampled.R == state.R


def test_ratio_family_bootstrap_instance():
    a = (PHI - 1) * 20 / 21
    fam = ratio_family(DiscreteSet.naturals(1), RotationOracle(PHI), a, a, 1)
    assert fam.yset == DiscreteSet([0, F(21, 20)])
    assert fam.admissible
    assert fam.checked_bound == exact(1)


def test_ratio_family_singleton_anchor_uses_first_bracketing_bound():
    # the anchor 0 has no value above the cut in its own prefix; its term
    # comes from the first prefix that brackets the cut
    f = TableOracle({0: 0, 1: 1, 2: F(1, 4)})
    fam = ratio_family(DiscreteSet.naturals(2), f, F(1, 8), F(1, 2), 2)
    term = fam.terms[0]
    assert term.anchor == exact(0)
    assert term.bound_used == exact(1)
    assert (term.left, term.right) == (exact(0), exact(1))


def test_ratio_family_repeated_value_not_admissible():
    # two anchors whose brackets coincide produce equal ratios
    f = TableOracle({0: 0, 1: 10, 2: 4, 3: 8, 4: 20})
    fam = ratio_family(DiscreteSet.naturals(4), f, 11, 5, 4)
    assert [str(t.anchor) for t in fam.terms] == ["0", "1"]
    assert fam.terms[0].value == fam.terms[1].value
    assert not fam.admissible


def test_ratio_family_cut_on_image_not_admissible():
    rot = RotationOracle(PHI)
    fam = ratio_family(DiscreteSet.naturals(4), rot, F(1, 2), 2 * PHI - 3, 4)
    assert not fam.admissible


def test_ratio_family_same_anchors_same_set(rng):
    # perturbing the outer cut inside its stability interval leaves the
    # family unchanged
    rot = RotationOracle(PHI)
    D = DiscreteSet.naturals(40)
    a = F(1, 2)
    lo, hi = stability_interval(D, rot, a, 30)
    b = F(2, 5)
    fam = ratio_family(D, rot, a, b, 30)
    width = hi - lo
    for k in (1, 7, 49):
        a2 = lo + width * F(k, 50)
        fam2 = ratio_family(D, rot, a2, b, 30)
        assert fam2.approx.L == fam.approx.L
        assert fam2.yset == fam.yset


def test_widen_interval_bootstrap_and_samples():
    rot = RotationOracle(PHI)
    D = DiscreteSet.naturals(1)
    a = (PHI - 1) / (1 + F(1, 120))
    fam = ratio_family(D, rot, a, a, 1)
    eps = F(1, 60)
    lo, hi = widen_interval(D, rot, fam, eps, 1)
    assert lo < a < hi
    width = hi - lo
    for k in (1, 13, 37, 49):
        c = lo + width * F(k, 50)
        if any(rot.eval(e) == c for e in D):
            continue
        moved = ratio_family(D, rot, a, c, 1)
        assert moved.admissible
        assert is_approx_segment(moved.yset, 3 * eps, 1)


def test_widen_interval_rejects_large_eps_and_bad_family():
    rot = RotationOracle(PHI)
    D = DiscreteSet.naturals(1)
    a = (PHI - 1) / (1 + F(1, 120))
    fam = ratio_family(D, rot, a, a, 1)
    with pytest.raises(EpsTooLarge):
        widen_interval(D, rot, fam, F(1, 3), 1)
    f = TableOracle({0: 0, 1: 10, 2: 4, 3: 8, 4: 20})
    bad = ratio_family(DiscreteSet.naturals(4), f, 11, 5, 4)
    with pytest.raises(NotInJ):
        widen_interval(DiscreteSet.naturals(4), f, bad, F(1, 60), 1)


def test_cross_radicand_pipelines_share_nothing(rng):
    # the same machinery runs for each quadratic base independently
    for base in ROTATION_BASES:
        rot = RotationOracle(base)
        D = DiscreteSet.naturals(30)
        state = best_approx(D, rot, F(1, 2), 20)
        brute_force_check(D, rot, state)


def test_verified_postconditions_on_request():
    rot = RotationOracle(PHI)
    D = DiscreteSet.naturals(40)
    lo, hi = stability_interval(D, rot, F(1, 3), 25,
                                verify_samples=50, seed=7)
    assert lo < exact(F(1, 3)) < hi
    a = (PHI - 1) / (1 + F(1, 120))
    fam = ratio_family(DiscreteSet.naturals(1), rot, a, a, 1)
    lo, hi = widen_interval(DiscreteSet.naturals(1), rot, fam, F(1, 60), 1,
                            verify_samples=25, seed=7)
    assert lo < a < hi


def test_cut_equal_to_a_value_joins_neither_side():
    # a value exactly on the cut is neither below nor above it
    f = TableOracle({0: 0, 1: F(1, 2), 2: 1, 3: F(1, 4)})
    state = best_approx(DiscreteSet.naturals(3), f, F(1, 2), 3)
    assert exact(1) not in state.L and exact(1) not in state.R
    assert list(state.L) == [exact(0), exact(3)]
    assert list(state.R) == [exact(2)]


def test_best_approx_duplicate_values_all_qualify():
    # an earlier equal value is not strictly between, so the later index
    # still counts as a best approximation
    f = TableOracle({0: F(1, 4), 1: F(1, 4), 2: 1})
    state = best_approx(DiscreteSet.naturals(2), f, F(1, 2), 2)
    assert list(state.L) == [exact(0), exact(1)]
    assert state.l == exact(F(1, 4))
