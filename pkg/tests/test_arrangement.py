from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiarr.arrangement import (
    A2,
    B2,
    DX,
    DY,
    EULER,
    Derivation,
    ExponentPair,
    Multiarrangement,
    apply,
    defining_polynomial,
    determinant_ratio,
    flip_y,
    is_balanced,
    is_member,
    non_balanced_basis,
    saito_check,
    saito_determinant,
    swap_xy,
)
from multiarr.closedform import theta_m
from multiarr.errors import BalancedInput, DegreeMismatch, LengthMismatch, NotMember
from multiarr.oracle import exponents, graded_piece
from multiarr.poly import X, Y, HomoPoly, LinearForm, divides
from multiarr.render import parse_derivation, parse_poly

XMY = LinearForm(1, -1)
XPY = LinearForm(1, 1)


def D(f, g):
    return parse_derivation(f, g)


def test_apply_examples():
    assert apply(EULER, XMY) == parse_poly("x - y")
    assert apply(D("y", "0"), X) == parse_poly("y")
    # the d/dy coefficient of theta_(1,3,2,2) is printed as -1/3 y^3
    assert apply(theta_m((1, 3, 2, 2)), Y) == parse_poly("-1/3 y^3")


def test_is_member_examples():
    assert is_member(EULER, B2, (1, 1, 1, 1))
    assert not is_member(D("y", "0"), B2, (1, 0, 0, 0))
    assert is_member(theta_m((3, 5, 2, 2)), B2, (3, 5, 2, 2))


def test_zero_multiplicity_imposes_nothing():
    assert is_member(DX, B2, (0, 0, 0, 0))
    assert is_member(DY, A2, (0, 0, 0))


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        is_member(EULER, B2, (1, 1, 1))
    with pytest.raises(ValueError):
        is_member(EULER, B2, (1, -1, 1, 1))


def test_proportional_forms_rejected():
    with pytest.raises(ValueError):
        Multiarrangement((X, LinearForm(2, 0)))


def test_derivation_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        Derivation(parse_poly("x"), parse_poly("x^2"))


def test_is_balanced_examples():
    assert is_balanced((1, 1, 1, 1))
    assert not is_balanced((1, 5, 1, 1))
    assert is_balanced((3, 5, 2, 2))


def test_saito_examples():
    assert saito_check(theta_m((1, 1, 1, 1)), theta_m((3, 3, 1, 1)), B2, (1, 1, 1, 1))
    assert not saito_check(EULER, EULER * parse_poly("x"), B2, (1, 1, 1, 1))
    assert not saito_check(EULER, EULER * parse_poly("x + y"), B2, (1, 1, 1, 0))


def test_saito_rejects_non_members():
    with pytest.raises(NotMember):
        saito_check(DX, EULER, B2, (1, 1, 1, 1))


def test_non_balanced_examples():
    t1, t2, exps = non_balanced_basis(B2, (1, 5, 1, 1))
    assert exps == ExponentPair(3, 5)
    assert t1 == D("x^3 - x y^2", "0")
    assert saito_check(t1, t2, B2, (1, 5, 1, 1))

    t1, t2, exps = non_balanced_basis(B2, (0, 3, 0, 0))
    assert (t1, exps) == (DX, ExponentPair(0, 3))

    _, _, exps = non_balanced_basis(B2, (2, 7, 1, 1))
    assert exps == ExponentPair(4, 7)


@pytest.mark.parametrize("k", range(4))
def test_non_balanced_each_position(k):
    m = [1, 1, 1, 1]
    m[k] = 6
    t1, t2, exps = non_balanced_basis(B2, m)
    assert exps == ExponentPair(3, 6) == exponents(B2, m)
    # the lower generator is annihilated by the dominant form
    assert apply(t1, B2.forms[k]).is_zero
    assert saito_check(t1, t2, B2, m)


def test_non_balanced_rejects_balanced():
    with pytest.raises(BalancedInput):
        non_balanced_basis(B2, (1, 1, 1, 1))


def test_symmetries_permute_multiplicities():
    theta = theta_m((3, 5, 2, 2))
    assert is_member(swap_xy(theta), B2, (5, 3, 2, 2))
    assert swap_xy(swap_xy(theta)) == theta
    assert flip_y(flip_y(theta)) == theta
    t = theta * parse_poly("x + y")
    assert is_member(t, B2, (3, 5, 2, 3))
    assert is_member(flip_y(t), B2, (3, 5, 3, 2))


def test_determinant_ratio():
    c = determinant_ratio(theta_m((1, 1, 1, 1)), theta_m((3, 3, 1, 1)), B2, (1, 1, 1, 1))
    assert c is not None and c != 0
    assert determinant_ratio(EULER, EULER, B2, (1, 1, 0, 0)) == 0
    assert determinant_ratio(EULER, DX * parse_poly("x y"), B2, (1, 1, 0, 0)) is None


# properties

small_m = st.tuples(*[st.integers(0, 3)] * 4)


@st.composite
def member_pairs(draw):
    m = draw(small_m)
    d1 = draw(st.integers(0, 6))
    d2 = draw(st.integers(0, 6))
    b1, b2 = graded_piece(B2, m, d1).basis, graded_piece(B2, m, d2).basis
    if not b1 or not b2:
        return m, None, None
    return m, b1[draw(st.integers(0, len(b1) - 1))], b2[draw(st.integers(0, len(b2) - 1))]


def rand_poly(draw, d):
    vals = draw(st.lists(st.integers(-3, 3), min_size=d + 1, max_size=d + 1))
    return HomoPoly(d, vals)


@settings(max_examples=40, deadline=None)
@given(member_pairs(), st.data())
def test_membership_is_linear(pair, data):
    m, t1, t2 = pair
    if t1 is None:
        return
    top = max(t1.degree, t2.degree) + data.draw(st.integers(0, 2))
    p = rand_poly(data.draw, top - t1.degree)
    q = rand_poly(data.draw, top - t2.degree)
    assert is_member(t1 * p + t2 * q, B2, m)


@settings(max_examples=40, deadline=None)
@given(member_pairs())
def test_saito_determinant_divisible(pair):
    m, t1, t2 = pair
    if t1 is None:
        return
    det = saito_determinant(t1, t2)
    for form, k in zip(B2.forms, m):
        assert divides(form, k, det)
    if t1.degree + t2.degree == sum(m) and not det.is_zero:
        assert saito_check(t1, t2, B2, m)
        assert determinant_ratio(t1, t2, B2, m) not in (None, Fraction(0))


def test_defining_polynomial():
    assert defining_polynomial(B2, (1, 1, 1, 1)) == parse_poly("x^3 y - x y^3")
