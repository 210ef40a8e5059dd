from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shard_forge.cartan import format_root, parse_root, rank4_dependence, validate
from shard_forge.errors import CartanError, ValidationError


def test_b2_valid(b2):
    c = validate([[2, -2], [-1, 2]], d=[1, 2], p=3)
    assert c.n == 2 and c.L == 2
    assert c.bilinear(c.simple(0), c.simple(1)) == -2


@pytest.mark.parametrize("raw,d", [
    ([[1, -1], [-1, 2]], None),          # diagonal
    ([[2, 1], [1, 2]], None),            # sign
    ([[2, -2], [-1, 2]], [1, 1]),        # not symmetrized by d
    ([[2, -1], [0, 2]], None),           # zero pattern not symmetric
])
def test_invalid_cartan(raw, d):
    with pytest.raises(CartanError):
        validate(raw, d=d)


def test_invalid_prime():
    with pytest.raises(ValidationError):
        validate([[2, -1], [-1, 2]], p=4)


def test_reflections(b2):
    assert b2.reflect_root(0, (0, 1)) == (2, 1)
    assert b2.reflect_root(1, (1, 0)) == (1, 1)
    assert b2.coroot_pairing(0, (0, 1)) == -2
    assert b2.coroot_pairing(1, (1, 1)) == 1


def test_d_beta(b2):
    # (beta, beta)/2 evaluated by hand: 2a1+a2 -> 4/2, a1+a2 -> 2/2
    assert b2.d_beta((2, 1)) == 2
    assert b2.d_beta((1, 1)) == 1
    assert b2.d_beta((0, 1)) == 2
    assert b2.d_beta((1, 0)) == 1


def test_rank4_matrix():
    c = rank4_dependence(3, 2, 2)
    assert c.A[0][3] == -3 and c.A[3][2] == -2 and c.A[0][1] == 0


def test_root_text_round_trip():
    assert parse_root("2,1") == (2, 1)
    assert format_root((3, 3, 2)) == "3,3,2"
    with pytest.raises(ValidationError):
        parse_root("1,x")
    with pytest.raises(ValidationError):
        parse_root("1,2", n=3)


@given(st.integers(0, 1), st.lists(st.integers(-5, 5), min_size=2, max_size=2),
       st.lists(st.integers(-5, 5), min_size=2, max_size=2))
def test_reflection_is_isometry(i, x, y):
    from shard_forge import load
    c = load("b2")
    assert c.bilinear(c.reflect_root(i, x), c.reflect_root(i, y)) == c.bilinear(x, y)
    assert c.reflect_root(i, c.reflect_root(i, x)) == tuple(x)


@given(st.integers(0, 3), st.lists(st.integers(-4, 4), min_size=4, max_size=4),
       st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_weight_reflection_adjoint(i, theta, x):
    from shard_forge import load
    c = load("d4")
    lhs = c.pair(c.reflect_weight(i, theta), c.reflect_root(i, x))
    assert lhs == Fraction(c.pair(theta, x))
