import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermat_rrp.errors import InvalidInputError
from fermat_rrp.ideals import (
    beta_ideal,
    element_valuation,
    factor_rational_prime,
    hnf,
    ideal_power,
    ideal_product,
    ideal_sum,
    principal_ideal,
    rational_ideal,
    reconstruct,
    unit_ideal,
    valuation_at,
)
from fermat_rrp.intmath import is_prime
from fermat_rrp.ring import alpha_element, beta_valuation, build_context, norm

import oracles


def test_hnf_shape():
    H = hnf([(5, 1, 0), (0, 5, 1)], 3, 29)
    assert H == ((1, 0, 22), (0, 1, 6), (0, 0, 29))


def test_principal_examples(ctx7):
    a = alpha_element(ctx7, 1)
    assert principal_ideal(ctx7.one()) == unit_ideal(ctx7)
    assert principal_ideal(ctx7.one()).norm == 1
    assert principal_ideal(5 + 2 * a).norm == 43
    assert principal_ideal(ctx7.scalar(7)).norm == 7 ** 3
    with pytest.raises(InvalidInputError):
        principal_ideal(ctx7.zero())


def test_ideal_is_closed_under_alpha(ctx):
    a = alpha_element(ctx, 1)
    I = principal_ideal(3 + a * a - 7 * a)
    for g in I.generators():
        assert I.contains(g * a)


def test_factor_r_is_beta_power(ctx):
    r, d = ctx.r, ctx.degree
    ((beta, e),) = factor_rational_prime(ctx, r)
    assert (beta.e, beta.f, e, beta.as_lattice.norm) == (d, 1, d, r)
    assert ideal_power(beta.as_lattice, d) == principal_ideal(ctx.scalar(r))


def test_factor_13_and_2(ctx7):
    fs = factor_rational_prime(ctx7, 13)
    assert [(P.e, P.f, e) for P, e in fs] == [(1, 1, 1)] * 3
    prod = unit_ideal(ctx7)
    for P, _ in fs:
        prod = ideal_product(prod, P.as_lattice)
    assert prod == principal_ideal(ctx7.scalar(13))
    ((P2, e2),) = factor_rational_prime(ctx7, 2)
    assert (P2.e, P2.f, e2, P2.as_lattice.norm) == (1, 3, 1, 8)
    with pytest.raises(InvalidInputError):
        factor_rational_prime(ctx7, 15)


@pytest.mark.parametrize("r", [7, 11, 13])
def test_splitting_consistency(r):
    ctx = build_context(r)
    for q in range(2, 60):
        if not is_prime(q):
            continue
        fs = factor_rational_prime(ctx, q)
        assert sum(P.e * P.f for P, _ in fs) == ctx.degree
        assert all(P.as_lattice.norm == q ** P.f for P, _ in fs)
        assert all(P.e == 1 for P, _ in fs) or q == r
        assert reconstruct(ctx, list(fs)) == rational_ideal(ctx, q)


def test_sum_examples(ctx7):
    a = alpha_element(ctx7, 1)
    A = principal_ideal(5 + 2 * a)
    assert ideal_sum(A, unit_ideal(ctx7)) == unit_ideal(ctx7)
    assert ideal_sum(A, A) == A
    assert ideal_product(A, unit_ideal(ctx7)) == A


# gcd norms from sympy's HNF in oracles.ideal_sum_norm
@pytest.mark.parametrize("x,y,expected", [(2, 1, 1), (3, 4, 7), (1, 0, 1)])
def test_gcd_of_f1_f2(ctx7, x, y, expected):
    s, m = x * x + y * y, x * y
    f1 = s + m * alpha_element(ctx7, 1)
    f2 = s + m * alpha_element(ctx7, 2)
    assert ideal_sum(principal_ideal(f1), principal_ideal(f2)).norm == expected
    assert oracles.ideal_sum_norm(list(f1.coeffs), list(f2.coeffs), ctx7.min_poly) == expected


def test_valuation_examples(ctx):
    beta = beta_ideal(ctx)
    assert valuation_at(beta, principal_ideal(ctx.scalar(ctx.r))) == ctx.degree
    assert valuation_at(beta, unit_ideal(ctx)) == 0
    diff = alpha_element(ctx, 1) - alpha_element(ctx, 2)
    assert valuation_at(beta, principal_ideal(diff)) == 1
    assert element_valuation(beta, diff) == 1


def elements(r, size=30):
    d = (r - 1) // 2
    return st.lists(st.integers(-size, size), min_size=d, max_size=d).map(
        lambda c: build_context(r).element(c)
    ).filter(lambda a: not a.is_zero())


@settings(max_examples=40, deadline=None)
@given(elements(7), elements(7))
def test_product_norm_multiplicative(a, b):
    A, B = principal_ideal(a), principal_ideal(b)
    assert ideal_product(A, B).norm == A.norm * B.norm
    assert ideal_product(A, B) == principal_ideal(a * b)
    assert A.norm == abs(norm(a))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([7, 11]).flatmap(elements))
def test_lattice_valuation_matches_norm_shortcut(a):
    beta = beta_ideal(a.ctx)
    assert valuation_at(beta, principal_ideal(a)) == beta_valuation(a)
    assert element_valuation(beta, a) == beta_valuation(a)


@settings(max_examples=30, deadline=None)
@given(elements(7), st.randoms(use_true_random=False))
def test_hnf_canonical_under_permutation(a, rnd):
    I = principal_ideal(a)
    gens = [g.coeffs for g in I.generators()] + [(a * a).coeffs, (3 * a).coeffs]
    rnd.shuffle(gens)
    assert hnf(gens, 3, I.norm) == I.basis


@settings(max_examples=25, deadline=None)
@given(elements(7, 12), elements(7, 12))
def test_sum_contains_both(a, b):
    A, B = principal_ideal(a), principal_ideal(b)
    S = ideal_sum(A, B)
    assert S.contains_ideal(A) and S.contains_ideal(B)
    assert S.norm == oracles.ideal_sum_norm(list(a.coeffs), list(b.coeffs), a.ctx.min_poly)


def test_prime_valuations_sum_to_norm(ctx7):
    rng = random.Random(3)
    for _ in range(20):
        a = ctx7.element([rng.randint(-40, 40) for _ in range(3)])
        if a.is_zero():
            continue
        n = abs(norm(a))
        from fermat_rrp.ideals import primes_dividing

        total = 1
        for P, v in primes_dividing(ctx7, a):
            total *= P.norm ** v
        assert total == n
