"""Arithmetic layer: square classes, Legendre/Hilbert symbols, local squares.

The Hilbert symbol at a finite place is checked against an independent
norm-class oracle: (a, b)_p = +1 iff b is a norm from Q_p(sqrt a), and the
norm classes x^2 - a y^2 can be sampled exactly over Z.  No formula from the
implementation is reused in the oracle.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittforge.errors import BoundExceeded, DomainError
from wittforge.qarith import (
    REAL,
    factor,
    hilbert_symbol,
    is_local_square,
    is_prime,
    is_square,
    legendre,
    padic_valuation,
    ramified_places,
    squarefree_part,
)

nonzero_rationals = st.fractions(
    min_value=Fraction(-400), max_value=Fraction(400), max_denominator=40
).filter(lambda f: f != 0)


# --- independent oracles -------------------------------------------------

def _square_class_key_2adic(n: int) -> tuple[int, int]:
    """(v mod 2, odd part mod 8) classifies Q_2 square classes of nonzero ints."""
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    return (v % 2, n % 8)


def _square_class_key_odd(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    squares = {x * x % p for x in range(1, p)}
    return (v % 2, 1 if n % p in squares else -1)


def _norm_class_oracle_2adic(a: int, b: int) -> int:
    """Sample square classes of x^2 - a y^2 over a box; (a,b)_2 = +1 iff the
    class of b shows up.  Needs |a|, |b| small; the box is provably enough for
    the squarefree inputs used in the tests (all classes are hit early)."""
    classes = set()
    for x in range(0, 512):
        for y in range(0, 512):
            n = x * x - a * y * y
            if n != 0:
                classes.add(_square_class_key_2adic(n))
    if _square_class_key_2adic(a) != (0, 1):
        # sqrt(a) not in Q_2 => norms have index 2 among the 8 classes
        assert len(classes) == 4, (a, sorted(classes))
    return 1 if _square_class_key_2adic(b) in classes else -1


def _norm_class_oracle_odd(a: int, b: int, p: int) -> int:
    classes = set()
    for x in range(0, 4 * p * p):
        for y in range(0, 4 * p * p):
            n = x * x - a * y * y
            if n != 0:
                classes.add(_square_class_key_odd(n, p))
    return 1 if _square_class_key_odd(b, p) in classes else -1


# --- frozen values -------------------------------------------------------

def test_squarefree_part_values():
    assert squarefree_part(18) == 2
    assert squarefree_part(-18) == -2
    assert squarefree_part(Fraction(4, 9)) == 1
    assert squarefree_part(Fraction(-8, 3)) == -6
    assert squarefree_part(1) == 1
    with pytest.raises(DomainError):
        squarefree_part(0)


def test_factor_refuses_unfactored_cofactor():
    with pytest.raises(BoundExceeded):
        factor((10**7 + 19) * (10**7 + 79), bound=10**3)


def test_is_prime_small():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_is_square():
    assert is_square(Fraction(49, 64))
    assert not is_square(Fraction(50, 64))
    assert not is_square(-4)


def test_padic_valuation():
    assert padic_valuation(Fraction(40, 27), 2) == 3
    assert padic_valuation(Fraction(40, 27), 3) == -3
    assert padic_valuation(Fraction(40, 27), 5) == 1
    with pytest.raises(DomainError):
        padic_valuation(0, 2)


def test_legendre_exhaustive_vs_squares():
    for p in (3, 5, 7, 11, 13):
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            want = 1 if a in squares else -1
            assert legendre(a, p) == want


def test_hilbert_real():
    assert hilbert_symbol(-1, -1, REAL) == -1
    assert hilbert_symbol(-1, 2, REAL) == 1
    assert hilbert_symbol(3, 5, REAL) == 1


def test_hilbert_2adic_against_norm_oracle():
    pairs = [(-1, -1), (-1, 2), (2, 3), (-2, -3), (3, 3), (5, 2), (-5, 6),
             (2, 2), (-1, 7), (6, -10), (7, 7), (-6, -6)]
    for a, b in pairs:
        assert hilbert_symbol(a, b, 2) == _norm_class_oracle_2adic(a, b), (a, b)


def test_hilbert_oddp_against_norm_oracle():
    for p in (3, 5):
        pairs = [(-1, -1), (-1, p), (p, p), (2, p), (-p, 2), (6, 10), (-2, -3)]
        for a, b in pairs:
            assert hilbert_symbol(a, b, p) == _norm_class_oracle_odd(a, b, p), (a, b, p)


def test_ramified_places_values():
    assert ramified_places(-1, -1) == frozenset({REAL, 2})
    assert ramified_places(2, 5) == frozenset({2, 5})
    assert ramified_places(1, 7) == frozenset()
    assert ramified_places(-1, 3) == frozenset({2, 3})
    assert ramified_places(-1, -3) == frozenset({REAL, 3})
    # (17, 89) splits everywhere: 89 = 4 mod 17 is a square and reciprocity
    # handles the rest; the class ramified exactly at {17, 89} needs a
    # different symbol.
    assert ramified_places(17, 89) == frozenset()


def test_is_local_square_values():
    assert is_local_square(-1, 5)
    assert not is_local_square(-1, 3)
    assert not is_local_square(-1, REAL)
    assert is_local_square(2, 7)
    assert not is_local_square(2, 5)
    assert is_local_square(17, 2)        # 17 = 1 mod 16
    assert not is_local_square(5, 2)
    assert is_local_square(Fraction(9, 4), 2)


# --- structural properties ----------------------------------------------

@given(nonzero_rationals, nonzero_rationals)
def test_square_class_invariance(a, b):
    # the symbol only depends on square classes
    for v in (REAL, 2, 3, 5):
        assert hilbert_symbol(a * b * b, a, v) == hilbert_symbol(a, a, v)


@given(nonzero_rationals, nonzero_rationals, nonzero_rationals)
@settings(max_examples=60)
def test_hilbert_bilinear(a, b, c):
    for v in (REAL, 2, 3, 7):
        lhs = hilbert_symbol(a, b * c, v)
        assert lhs == hilbert_symbol(a, b, v) * hilbert_symbol(a, c, v)


@given(nonzero_rationals, nonzero_rationals)
def test_hilbert_symmetric_and_steinberg(a, b):
    for v in (REAL, 2, 5):
        assert hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v)
    if a != 1:
        for v in (REAL, 2, 5):
            assert hilbert_symbol(a, 1 - a, v) == 1 or a == 1


@given(nonzero_rationals, nonzero_rationals)
@settings(max_examples=80)
def test_product_formula(a, b):
    prod = 1
    for v in ramified_places(a, b):
        prod *= hilbert_symbol(a, b, v)
    assert prod == 1


@given(nonzero_rationals)
def test_local_square_iff_trivial_symbols(a):
    # a square at v iff (a, b)_v = 1 for the generating b's
    for v in (2, 3, REAL):
        if is_local_square(a, v):
            for b in (-1, 2, 3, 5, -6):
                assert hilbert_symbol(a, b, v) == 1
