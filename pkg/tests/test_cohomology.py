"""Brauer classes in ramification coordinates and the H^3 cup product."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittforge.cohomology import (
    H3Class,
    ZERO,
    BrauerClass,
    brauer_from_symbol,
    brauer_sum,
    cup_h3,
    find_quaternion_symbol,
)
from wittforge.errors import DomainError
from wittforge.qarith import REAL, hilbert_symbol, ramified_places

nonzero = st.fractions(
    min_value=Fraction(-200), max_value=Fraction(200), max_denominator=20
).filter(lambda f: f != 0)


def test_brauer_class_rejects_odd_sets():
    with pytest.raises(DomainError):
        BrauerClass(frozenset({2}))
    with pytest.raises(DomainError):
        BrauerClass(frozenset({REAL, 2, 5}))


def test_brauer_addition_is_symmetric_difference():
    a = brauer_from_symbol(-1, -1)   # {real, 2}
    b = brauer_from_symbol(2, 5)     # {2, 5}
    assert (a + b).ramified == frozenset({REAL, 5})
    assert (a + a).is_zero()
    assert brauer_sum([a, b, a, b]).is_zero()


def test_known_symbols():
    assert brauer_from_symbol(-1, -1).ramified == frozenset({REAL, 2})
    assert brauer_from_symbol(2, 5).ramified == frozenset({2, 5})
    assert brauer_from_symbol(1, 1).is_zero()
    assert brauer_from_symbol(-1, 2).is_zero()


def test_sort_key_orders_real_first():
    c = brauer_from_symbol(-1, -5)
    assert c.sort_key()[0] == REAL


@given(nonzero, nonzero, nonzero)
@settings(max_examples=50)
def test_symbol_bilinearity_in_brauer(a, b, c):
    lhs = brauer_from_symbol(a, b * c)
    rhs = brauer_from_symbol(a, b) + brauer_from_symbol(a, c)
    assert lhs == rhs


def test_find_symbol_roundtrip_simple():
    for a, b in [(-1, -1), (2, 5), (3, 5), (-1, 7), (6, -35)]:
        cls = brauer_from_symbol(a, b)
        fa, fb = find_quaternion_symbol(cls)
        assert ramified_places(fa, fb) == cls.ramified


def test_find_symbol_zero():
    assert find_quaternion_symbol(ZERO) == (1, 1)


def test_find_symbol_needs_auxiliary_prime():
    # (17, 89) itself splits everywhere, so representing the class ramified
    # exactly at {17, 89} forces a second slot from outside the set.
    cls = BrauerClass(frozenset({17, 89}))
    a, b = find_quaternion_symbol(cls)
    assert ramified_places(a, b) == frozenset({17, 89})
    assert hilbert_symbol(a, b, 17) == -1
    assert hilbert_symbol(a, b, 89) == -1


def test_cup_product_values():
    q_ram_real = brauer_from_symbol(-1, -1)
    q_finite = brauer_from_symbol(2, 5)
    assert cup_h3(-1, q_ram_real) == H3Class(1)
    assert cup_h3(1, q_ram_real) == H3Class(0)
    assert cup_h3(-3, q_finite) == H3Class(0)
    assert cup_h3(-1, ZERO) == H3Class(0)
    assert cup_h3(Fraction(-4, 9), q_ram_real) == H3Class(1)


@given(nonzero, nonzero)
@settings(max_examples=40)
def test_cup_additive_in_second_slot(a, b):
    q1 = brauer_from_symbol(a, b)
    q2 = brauer_from_symbol(-1, -1)
    for x in (-1, 2, -6):
        assert cup_h3(x, q1 + q2) == cup_h3(x, q1) + cup_h3(x, q2)


@given(nonzero, nonzero)
@settings(max_examples=40)
def test_cup_multiplicative_in_first_slot(a, b):
    q = brauer_from_symbol(a, b)
    for x, y in [(-1, -2), (3, -5), (-6, -10)]:
        assert cup_h3(x * y, q) == cup_h3(x, q) + cup_h3(y, q)
