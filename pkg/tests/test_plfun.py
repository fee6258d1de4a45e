from fractions import Fraction as F

import pytest

from exactlab import PLFunction, exact
from exactlab.errors import OutOfDomain


def test_eval_linear_pieces():
    f = PLFunction.from_values([(0, 0), (1, 2), (2, 1)])
    assert f(F(1, 2)) == exact(1)
    assert f(F(3, 2)) == exact(F(3, 2))
    assert f(0) == exact(0)
    assert f(2) == exact(1)


def test_eval_at_jump_returns_right_limit():
    f = PLFunction([(0, 0, 0), (1, F(1, 2), 1), (2, F(3, 2), F(3, 2))])
    assert f(1) == exact(1)
    assert f.left_limit(1) == exact(F(1, 2))
    assert f.right_limit(1) == exact(1)


def test_limits_inside_pieces_match_value():
    f = PLFunction.from_values([(0, 0), (2, 4)])
    assert f.left_limit(1) == f(1) == f.right_limit(1) == exact(2)


def test_limits_at_domain_ends():
    f = PLFunction.from_values([(0, 0), (1, 1)])
    with pytest.raises(OutOfDomain):
        f.left_limit(0)
    with pytest.raises(OutOfDomain):
        f.right_limit(1)
    assert f.right_limit_or_value(1) == exact(1)


def test_out_of_domain():
    f = PLFunction.from_values([(0, 0), (1, 1)])
    with pytest.raises(OutOfDomain):
        f(2)
    with pytest.raises(OutOfDomain):
        f(F(-1, 2))


def test_monotone_flags():
    up = PLFunction.from_values([(0, 0), (1, 1), (2, 3)])
    assert up.is_nondecreasing() and up.is_strictly_increasing()
    flat = PLFunction.constant(0, 1, 5)
    assert flat.is_nondecreasing() and not flat.is_strictly_increasing()
    wiggle = PLFunction.from_values([(0, 0), (1, 2), (2, 1)])
    assert not wiggle.is_nondecreasing()
    jumpy = PLFunction([(0, 0, 0), (1, 1, 2), (2, 3, 3)])
    assert jumpy.is_strictly_increasing()
    drop = PLFunction([(0, 0, 0), (1, 1, F(1, 2)), (2, 1, 1)])
    assert not drop.is_nondecreasing()


def test_step_function_builder():
    f = PLFunction.step_function(0, 3, [(1, F(1, 2)), (2, F(1, 4))])
    assert f(F(1, 2)) == exact(0)
    assert f(1) == exact(F(1, 2))
    assert f.left_limit(1) == exact(0)
    assert f(F(5, 2)) == exact(F(3, 4))
    assert f.is_nondecreasing()


def test_cantor_staircase_shape():
    f1 = PLFunction.cantor_staircase(1)
    assert [(str(p.x), str(p.right)) for p in f1.points] == \
        [("0", "0"), ("1/3", "1/2"), ("2/3", "1/2"), ("1", "1")]
    f6 = PLFunction.cantor_staircase(6)
    assert f6.is_nondecreasing()
    assert f6(0) == exact(0) and f6(1) == exact(1)
    assert f6(F(1, 2)) == exact(F(1, 2))
    # stage self-similarity: left third squeezes the previous stage
    f5 = PLFunction.cantor_staircase(5)
    for x in (F(1, 4), F(5, 9), F(7, 8)):
        assert f6(x / 3) == f5(x) / 2


def test_add_linear():
    f = PLFunction.from_values([(0, 0), (1, 1)])
    g = f.add_linear(1, -2)
    assert g(0) == exact(1)
    assert g(1) == exact(0)
    assert g(F(1, 2)) == exact(F(1, 2))


def test_text_round_trip():
    f = PLFunction([(0, 0, 0), (1, F(1, 2), 1), (3, 2, 2)])
    again = PLFunction.parse(f.to_text())
    assert again.to_text() == f.to_text()
    assert [(p.x, p.left, p.right) for p in again.points] == \
        [(p.x, p.left, p.right) for p in f.points]


def test_parse_rejects_malformed():
    with pytest.raises(ValueError):
        PLFunction.parse("0 0 0\n1 1 1\n")
    with pytest.raises(ValueError):
        PLFunction.parse("domain 0 1\n0 0\n1 1\n")
    with pytest.raises(ValueError):
        PLFunction.parse("domain 0 2\n0 0 0\n1 1 1\n")


def test_construction_validation():
    with pytest.raises(ValueError):
        PLFunction([(0, 0, 0)])
    with pytest.raises(ValueError):
        PLFunction([(0, 0, 0), (0, 1, 1)])
