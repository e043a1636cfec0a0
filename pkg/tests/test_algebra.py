from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pfaffian.algebra import (
    MultiPoly,
    eval_poly,
    format_scalar,
    parse_scalar,
    poly_normalize,
    scalar_div,
)


def g(i, j):
    return MultiPoly.gen(i, j)


# --- normalization ---------------------------------------------------------


def test_normalize_cancels_opposite_terms():
    assert poly_normalize([(((1, 2),), 1), (((1, 2),), -1)]).is_zero


def test_normalize_flips_reversed_indices():
    assert poly_normalize([(((2, 1),), 1)]) == -g(1, 2)


def test_normalize_merges_commuted_products():
    raw = [(((1, 2), (3, 4)), 2), (((3, 4), (1, 2)), 3)]
    assert poly_normalize(raw) == 5 * g(1, 2) * g(3, 4)


def test_normalize_kills_diagonal_factors():
    assert poly_normalize([(((3, 3), (1, 2)), 7)]).is_zero


def test_gen_canonicalization():
    assert g(5, 5).is_zero
    assert g(4, 1) == -g(1, 4)
    with pytest.raises(ValueError):
        g(-1, 2)


# --- evaluation ------------------------------------------------------------


def test_eval_zero_polynomial():
    assert eval_poly(MultiPoly.zero(), {}) == 0


def test_eval_single_variable():
    assert eval_poly(g(1, 2), {(1, 2): Fraction(3, 2)}) == Fraction(3, 2)


def test_eval_three_term_pfaffian_at_ones():
    poly = g(1, 2) * g(3, 4) - g(1, 3) * g(2, 4) + g(1, 4) * g(2, 3)
    assignment = {(i, j): Fraction(1) for i in range(1, 5) for j in range(i + 1, 5)}
    assert eval_poly(poly, assignment) == 1


def test_eval_missing_variable_named():
    with pytest.raises(ValueError, match=r"g\(1,2\)"):
        eval_poly(g(1, 2), {(3, 4): Fraction(1)})


# --- scalar helpers --------------------------------------------------------


def test_scalar_div_examples():
    assert scalar_div(Fraction(6), Fraction(4)) == Fraction(3, 2)
    assert scalar_div(Fraction(-7, 3), Fraction(-7, 3)) == 1
    assert scalar_div(Fraction(0), Fraction(5, 9)) == 0


def test_scalar_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        scalar_div(Fraction(1), Fraction(0))


def test_scalar_text_round_trip():
    for text in ["3/2", "-7", "0", "22/7", "-5/3"]:
        assert format_scalar(parse_scalar(text)) == text
    with pytest.raises(ValueError):
        parse_scalar("three halves")
    with pytest.raises(ValueError):
        parse_scalar("1/0")


# --- polynomial serialization ----------------------------------------------


def test_poly_text_fixture():
    poly = g(1, 2) * g(3, 4) - 2 * g(1, 3) ** 2
    assert poly.to_text() == "g(1,2)*g(3,4) - 2*g(1,3)^2"
    assert MultiPoly.from_text("g(1,2)*g(3,4) - 2*g(1,3)^2") == poly
    assert MultiPoly.from_text("0").is_zero
    assert MultiPoly.zero().to_text() == "0"


def test_poly_text_rejects_garbage():
    with pytest.raises(ValueError):
        MultiPoly.from_text("g(1,2) % g(3,4)")
    with pytest.raises(ValueError):
        MultiPoly.from_text("")


def test_pow_zero_is_one():
    assert MultiPoly.zero() ** 0 == MultiPoly.one()
    assert g(1, 2) ** 0 == 1
    with pytest.raises(ValueError):
        g(1, 2) ** -1


# --- property tests --------------------------------------------------------

scalars = st.fractions(
    min_value=-100, max_value=100, max_denominator=97
)

indices = st.integers(min_value=0, max_value=4)

raw_terms = st.lists(
    st.tuples(
        st.lists(st.tuples(indices, indices), max_size=3),
        st.integers(min_value=-6, max_value=6),
    ),
    max_size=5,
)

polys = raw_terms.map(poly_normalize)

full_assignment = st.fixed_dictionaries(
    {(i, j): scalars for i in range(5) for j in range(i + 1, 5)}
)


@given(scalars, scalars, scalars)
def test_scalar_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys, polys, full_assignment)
def test_eval_is_a_ring_morphism(p, q, assignment):
    assert eval_poly(p * q, assignment) == eval_poly(p, assignment) * eval_poly(q, assignment)
    assert eval_poly(p + q, assignment) == eval_poly(p, assignment) + eval_poly(q, assignment)


@given(raw_terms)
def test_normalize_idempotent(raw):
    once = poly_normalize(raw)
    # rebuild the raw form from the normalized terms and normalize again
    rebuilt = []
    for monomial, coeff in once.terms():
        factors = []
        for var, exp in monomial:
            factors.extend([var] * exp)
        rebuilt.append((tuple(factors), coeff))
    assert poly_normalize(rebuilt) == once


@given(polys)
def test_poly_text_round_trip(p):
    assert MultiPoly.from_text(p.to_text()) == p


@given(polys, polys)
def test_poly_hash_consistent_with_eq(p, q):
    if p == q:
        assert hash(p) == hash(q)
    assert (p - q).is_zero == (p == q)
