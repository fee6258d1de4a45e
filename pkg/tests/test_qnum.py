from fractions import Fraction as F

import pytest

from exactlab import ExactNumber, PHI, SQRT2, SQRT3, exact, parse_exact
from exactlab.errors import DivisionByZero, RadicandMismatch

from conftest import rand_quadratic


def test_rational_addition():
    assert exact(F(1, 2)) + exact(F(1, 3)) == exact(F(5, 6))


def test_conjugate_sum_is_rational():
    x = ExactNumber(F(1, 2), F(1, 2), 5)
    y = ExactNumber(F(1, 2), F(-1, 2), 5)
    assert x + y == exact(1)


def test_mixed_coefficient_sum():
    x = exact(2) + ExactNumber.sqrt(5)
    y = (exact(-3) + 2 * ExactNumber.sqrt(5)) / 7
    assert x + y == ExactNumber(F(11, 7), F(9, 7), 5)


def test_sqrt_squares_to_radicand():
    assert SQRT2 * SQRT2 == exact(2)


def test_golden_ratio_inverse():
    assert PHI.inverse() == PHI - 1
    assert PHI * PHI.inverse() == exact(1)


def test_division():
    assert exact(3) / exact(F(1, 4)) == exact(12)


def test_inverse_of_zero_rejected():
    with pytest.raises(DivisionByZero):
        exact(0).inverse()


def test_compare_rational_to_sqrt2():
    assert exact(F(7, 5)).compare(SQRT2) == -1


def test_compare_equal():
    assert SQRT2.compare(SQRT2) == 0


def test_compare_phi_above_eight_fifths():
    assert PHI.compare(F(8, 5)) == 1


def test_radicand_mismatch():
    with pytest.raises(RadicandMismatch):
        SQRT2 + SQRT3
    with pytest.raises(RadicandMismatch):
        SQRT2.compare(SQRT3)


def test_rational_operand_adopts_radicand():
    assert exact(1) + SQRT2 == ExactNumber(1, 1, 2)


def test_floor_examples():
    assert exact(F(7, 3)).floor() == 2
    assert exact(F(-1, 2)).floor() == -1
    assert (3 * PHI).floor() == 4
    assert (-3 * PHI).floor() == -5
    assert (100 * SQRT2).floor() == 141


def test_floor_bracketing_property(rng):
    for _ in range(300):
        x = rand_quadratic(rng, m=rng.choice((2, 3, 5)))
        n = x.floor()
        assert exact(n) <= x < exact(n + 1)


def test_frac_in_unit_interval(rng):
    for _ in range(100):
        x = rand_quadratic(rng)
        f = x.frac()
        assert exact(0) <= f < exact(1)


def test_field_axioms_sampled(rng):
    for _ in range(200):
        a, b, c = (rand_quadratic(rng, m=3) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a - a == exact(0)
        if b.sign() != 0:
            assert (a / b) * b == a


def test_order_respects_arithmetic(rng):
    for _ in range(200):
        a, b, c = (rand_quadratic(rng, m=2) for _ in range(3))
        if a < b:
            assert a + c < b + c
            if c.sign() > 0:
                assert a * c < b * c


def test_total_order(rng):
    values = [rand_quadratic(rng) for _ in range(60)]
    sorted_vals = sorted(values)
    for x, y in zip(sorted_vals, sorted_vals[1:]):
        assert x <= y


def test_canonical_equality():
    assert ExactNumber(F(2, 4), F(6, 4), 5) == ExactNumber(F(1, 2), F(3, 2), 5)
    # radicand folds away when the coefficient vanishes
    assert ExactNumber(3, 0, 7) == exact(3)
    assert ExactNumber(1, 2, 1) == exact(3)


def test_square_free_validation():
    with pytest.raises(ValueError):
        ExactNumber(0, 1, 8)
    with pytest.raises(ValueError):
        ExactNumber.sqrt(12)
    with pytest.raises(ValueError):
        ExactNumber.sqrt(-2)


def test_parse_format_round_trip(rng):
    for _ in range(150):
        x = rand_quadratic(rng, m=rng.choice((0, 2, 5, 7)))
        assert parse_exact(str(x)) == x


def test_parse_whitespace_insensitive():
    assert parse_exact(" 1/2 + 1/2 * sqrt( 5 ) ".replace(" ", "")) == PHI
    assert parse_exact("1/2+1/2*sqrt(5)") == PHI
    assert parse_exact("  3 / 4 ") == exact(F(3, 4))


def test_parse_bare_sqrt_and_signs():
    assert parse_exact("sqrt(2)") == SQRT2
    assert parse_exact("-sqrt(2)") == -SQRT2
    assert parse_exact("2-3/4*sqrt(7)") == ExactNumber(2, F(-3, 4), 7)


def test_parse_rejects_garbage():
    for bad in ("", "one", "1//2", "sqrt(2)+sqrt(3)"):
        with pytest.raises((ValueError, RadicandMismatch)):
            parse_exact(bad)


def test_rational_round_trip_under_any_radicand():
    x = exact(F(21, 20))
    assert ExactNumber(F(21, 20), 0, 5) == x
    assert x + SQRT2 - SQRT2 == x


def test_str_of_rationals_matches_fraction():
    assert str(exact(F(21, 20))) == "21/20"
    assert str(exact(-3)) == "-3"
    assert str(PHI) == "1/2+1/2*sqrt(5)"
