"""Skew-hermitian forms: discriminants, entry rescaling, split transport.

The closed-form discriminant (-1)^n prod nrd(qi) is cross-checked against
the signed discriminant of the transported quadratic form whenever the
algebra splits; the two computations share no code path.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wittforge.errors import DomainError
from wittforge.hermitian import (
    SkewHermForm,
    disc_adjoint,
    from_json,
    rescale_entry,
    scaled_form,
    skew_form,
    to_json,
    to_quadratic_form,
    twist_last_entry,
)
from wittforge.qarith import squarefree_part
from wittforge.quadform import diagonal, e1, hyperbolic, isometric
from wittforge.quat import algebra, pure

split_params = st.sampled_from([(1, 1), (1, -1), (2, -2), (3, 6), (1, 5), (-1, 2)])
any_params = st.sampled_from([(-1, -1), (2, 5), (1, 1), (-1, 2), (-3, -1), (2, -2)])
coords = st.tuples(*(st.integers(min_value=-4, max_value=4) for _ in range(3)))


def _pures(alg, data, n):
    # non-invertible draws fall back to i, which has nrd -a != 0
    out = []
    for _ in range(n):
        q = pure(alg, *data.draw(coords))
        out.append(q if q.is_invertible() else pure(alg, 1, 0, 0))
    return out


def test_disc_rank_one_is_the_square():
    # <j> with j^2 = a0 has discriminant a0
    h = algebra(-1, -1)
    assert disc_adjoint(skew_form(h, h.i())) == -1
    assert disc_adjoint(skew_form(h, h.j())) == -1
    assert disc_adjoint(skew_form(h, h.element(0, 1, 1, 1))) == -3


def test_disc_rank_three_is_product_of_squares():
    h = algebra(-1, -1)
    f = skew_form(h, h.i(), h.j(), h.k())
    # squares are -1, -1, -1; product -1
    assert disc_adjoint(f) == -1
    g = skew_form(h, h.i(), h.j(), h.element(0, 1, 1, 1))
    assert disc_adjoint(g) == squarefree_part(-1 * -1 * -3)


def test_entries_must_be_pure_invertible():
    h = algebra(1, 1)
    with pytest.raises(DomainError):
        skew_form(h, h.one())
    with pytest.raises(DomainError):
        skew_form(h, h.element(0, 3, 4, 5))


@given(st.data(), any_params)
@settings(max_examples=40, deadline=None)
def test_rescale_preserves_disc_and_class(data, params):
    alg = algebra(*params)
    f = skew_form(alg, *_pures(alg, data, 3))
    idx = data.draw(st.integers(min_value=0, max_value=2))
    g = rescale_entry(f, idx)
    assert g.rank == f.rank
    # rescaling multiplies one nrd by c^2: the discriminant is untouched
    assert disc_adjoint(g) == disc_adjoint(f)


def test_rescale_moves_written_entry():
    h = algebra(-1, -1)
    f = skew_form(h, h.i(), h.j(), h.k())
    g = rescale_entry(f, 0)
    ratio = g.entries[0] * f.entries[0].inverse()
    c = ratio.coeffs[0]
    assert ratio == h.one() * c and c != 0
    assert g.entries[0] == f.entries[0] * c


def test_scaled_shape_and_twist():
    h = algebra(-1, -1)
    base = h.i()
    f = scaled_form(h, base, (1, 1, 1, 1, 1, 1))
    assert f.rank == 6 and f.multipliers is not None
    g = twist_last_entry(f, -1)
    assert g.multipliers == tuple(Fraction(m) for m in (1, 1, 1, 1, 1, -1))
    assert g.entries[:5] == f.entries[:5]
    assert g.entries[5] == f.entries[5] * Fraction(-1)
    assert twist_last_entry(f, 1) == f
    with pytest.raises(DomainError):
        twist_last_entry(f, 0)
    with pytest.raises(DomainError):
        twist_last_entry(skew_form(h, *(h.i(),) * 6), -1)
    with pytest.raises(DomainError):
        twist_last_entry(scaled_form(h, base, (1, 2)), -1)


def test_twist_moves_multiplier_discriminant():
    # e1 of the written multiplier form picks up exactly c
    h = algebra(-1, -1)
    f = scaled_form(h, h.j(), (1, 2, 3, 1, 1, 5))
    for c in (-1, 2, -30):
        g = twist_last_entry(f, c)
        before = e1(diagonal(*f.multipliers))
        after = e1(diagonal(*g.multipliers))
        assert after == squarefree_part(Fraction(c) * before)
        # the closed-form adjoint discriminant never sees the twist
        assert disc_adjoint(g) == disc_adjoint(f)


def test_scaled_form_validation():
    h = algebra(-1, -1)
    with pytest.raises(DomainError):
        scaled_form(h, h.i(), (1, 0, 2))
    with pytest.raises(DomainError):
        SkewHermForm(h, (h.i(), h.j()), base=h.i(),
                     multipliers=(Fraction(1), Fraction(1)))


def test_transport_needs_split_algebra():
    with pytest.raises(DomainError):
        to_quadratic_form(skew_form(algebra(-1, -1), algebra(-1, -1).i()))


@given(st.data(), split_params, st.integers(min_value=1, max_value=3))
@settings(max_examples=50, deadline=None)
def test_split_transport_disc_agreement(data, params, n):
    alg = algebra(*params)
    assert alg.is_split()
    f = skew_form(alg, *_pures(alg, data, n))
    q = to_quadratic_form(f)
    assert q.dim == 2 * n
    assert e1(q) == disc_adjoint(f)


def test_split_transport_frozen():
    # single entry mu with mu^2 = 1 over M2(Q): disc = (-1) nrd(mu) = 1 and
    # the rank 2 adjoint form is the hyperbolic plane
    alg = algebra(1, 1)
    f = skew_form(alg, alg.i())
    assert disc_adjoint(f) == 1
    q = to_quadratic_form(f)
    assert q.dim == 2 and e1(q) == 1
    assert isometric(q, hyperbolic(1))


def test_json_roundtrip():
    h = algebra(-1, -1)
    f = scaled_form(h, h.i(), (1, 2, 3, 1, 1, 5))
    data = to_json(f)
    assert data["alg"] == {"a": "-1", "b": "-1"}
    assert data["entries"][0] == {"alg": {"a": "-1", "b": "-1"},
                                  "coords": ["0", "1", "0", "0"]}
    assert data["multipliers"] == ["1", "2", "3", "1", "1", "5"]
    assert from_json(data) == f
    f2 = skew_form(h, h.i(), h.k())
    assert "multipliers" not in to_json(f2)
    assert from_json(to_json(f2)) == f2
    with pytest.raises(DomainError):
        from_json({"alg": {"a": "1"}, "entries": []})
    with pytest.raises(DomainError):
        from_json({"alg": {"a": "1", "b": "1"}, "entries": []})
    mixed = to_json(f2)
    mixed["entries"][1]["alg"]["a"] = "5"
    with pytest.raises(DomainError):
        from_json(mixed)
