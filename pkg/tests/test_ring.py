import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat_rrp.errors import InvalidInputError
from fermat_rrp.ring import (
    alpha_element,
    beta_valuation,
    build_context,
    chebyshev_polys,
    evaluate_poly_at,
    galois_apply,
    norm,
)

import oracles

# numeric expansion of prod (t - 2cos(2 pi j / r)), see oracles.numeric_minpoly
PSI_7 = (-1, -2, 1, 1)
PSI_11 = (1, 3, -3, -4, 1, 1)


def test_frozen_minpolys_match_numeric_oracle():
    assert list(PSI_7) == oracles.numeric_minpoly(7)
    assert list(PSI_11) == oracles.numeric_minpoly(11)


def test_min_poly_r7_r11():
    assert build_context(7).min_poly == PSI_7
    assert build_context(11).min_poly == PSI_11


@pytest.mark.parametrize("r", [7, 11, 13, 17, 19, 23])
def test_min_poly_matches_numeric_expansion(r):
    ctx = build_context(r)
    assert len(ctx.min_poly) == (r - 1) // 2 + 1
    assert ctx.min_poly[-1] == 1
    assert list(ctx.min_poly) == oracles.numeric_minpoly(r)


@pytest.mark.parametrize("r", [1, 2, 3, 5, 9, 15, -7])
def test_rejects_bad_r(r):
    with pytest.raises(InvalidInputError):
        build_context(r)


def test_alpha_table(ctx):
    a = alpha_element(ctx, 1)
    assert alpha_element(ctx, 0) == 2
    assert a.coeffs == (0, 1) + (0,) * (ctx.degree - 2)
    for j in range(1, ctx.degree):
        assert alpha_element(ctx, j + 1) == a * alpha_element(ctx, j) - alpha_element(ctx, j - 1)
    assert evaluate_poly_at(ctx.min_poly, a).is_zero()


def test_alpha_small_indices(ctx7):
    a = alpha_element(ctx7, 1)
    assert alpha_element(ctx7, 2) == a * a - 2
    assert alpha_element(ctx7, 3) == a ** 3 - 3 * a
    with pytest.raises(InvalidInputError):
        alpha_element(ctx7, 4)


def test_chebyshev_polys():
    assert chebyshev_polys(3) == [[2], [0, 1], [-2, 0, 1], [0, -3, 0, 1]]


def test_norm_examples(ctx7):
    a = alpha_element(ctx7, 1)
    assert norm(ctx7.one()) == 1
    # conjugate product of alpha_1 - alpha_2 is -7 (oracles.numeric_norm)
    assert norm(a - alpha_element(ctx7, 2)) == -7
    assert norm(a - alpha_element(ctx7, 2)) ** 2 == 49
    # Res(psi_7, 2t + 5) = 43
    assert norm(5 + 2 * a) == 43
    assert norm(ctx7.scalar(7)) == 7 ** 3


def test_norm_examples_against_oracles(ctx7):
    assert oracles.numeric_norm([2, 1, -1], 7) == -7
    assert oracles.resultant_norm([5, 2], 7, PSI_7) == 43


def test_galois_examples(ctx7):
    a1, a2, a3 = (alpha_element(ctx7, j) for j in (1, 2, 3))
    assert galois_apply(a1, 2) == a2
    assert galois_apply(a3, 3) == a2
    x = 3 + 5 * a1 - a2
    assert galois_apply(x, 1) == x
    with pytest.raises(InvalidInputError):
        galois_apply(a1, 14)


def test_beta_valuation_examples(ctx):
    r = ctx.r
    assert beta_valuation(ctx.scalar(r)) == (r - 1) // 2
    assert beta_valuation(alpha_element(ctx, 1) - alpha_element(ctx, 2)) == 1
    assert beta_valuation(ctx.one()) == 0
    with pytest.raises(InvalidInputError):
        beta_valuation(ctx.zero())


@pytest.mark.parametrize("r", [7, 11, 13, 17, 19])
def test_alpha_differences_have_beta_valuation_one(r):
    ctx = build_context(r)
    d = ctx.degree
    for j in range(d + 1):
        for k in range(j):
            assert beta_valuation(alpha_element(ctx, k) - alpha_element(ctx, j)) == 1


@pytest.mark.parametrize("r", [7, 11, 13])
def test_rational_r(r):
    ctx = build_context(r)
    assert norm(ctx.scalar(r)) == r ** ((r - 1) // 2)


def elements(r, size=50):
    d = (r - 1) // 2
    return st.lists(st.integers(-size, size), min_size=d, max_size=d).map(
        lambda c: build_context(r).element(c)
    )


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([7, 11, 13]).flatmap(lambda r: st.tuples(elements(r), elements(r))))
def test_norm_and_valuation_multiplicative(pair):
    a, b = pair
    assert norm(a * b) == norm(a) * norm(b)
    if a and b:
        assert beta_valuation(a * b) == beta_valuation(a) + beta_valuation(b)


@settings(max_examples=40, deadline=None)
@given(elements(7, 1000))
def test_norm_matches_numeric_conjugates(a):
    assert norm(a) == oracles.numeric_norm(list(a.coeffs), 7)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([7, 11, 13]).flatmap(lambda r: st.tuples(elements(r), st.integers(1, r - 1))))
def test_galois_preserves_norm_and_valuation(pair):
    a, i = pair
    b = galois_apply(a, i)
    assert norm(b) == norm(a)
    if a:
        assert beta_valuation(b) == beta_valuation(a)


@settings(max_examples=40, deadline=None)
@given(elements(11), elements(11), elements(11))
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
