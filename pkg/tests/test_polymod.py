import pytest
import sympy

from fermat_rrp import polymod
from fermat_rrp.ring import build_context

import oracles


def test_psi7_mod13_splits_at_brute_force_roots():
    psi = build_context(7).min_poly
    roots = oracles.roots_mod(psi, 13)
    assert roots == [7, 8, 10]
    factors = polymod.factor(psi, 13)
    assert [g for g, _ in factors] == sorted(((-t) % 13, 1) for t in roots)
    assert all(m == 1 for _, m in factors)


def test_psi7_mod2_irreducible():
    psi = build_context(7).min_poly
    assert oracles.roots_mod(psi, 2) == []
    assert polymod.factor(psi, 2) == [((1, 0, 1, 1), 1)]


@pytest.mark.parametrize("r", [7, 11, 13, 17, 19])
def test_psi_mod_r_is_power_of_t_minus_2(r):
    d = (r - 1) // 2
    assert polymod.factor(build_context(r).min_poly, r) == [(((-2) % r, 1), d)]


def _sympy_factor(poly, q):
    t = sympy.Symbol("t")
    _, fl = sympy.Poly(list(reversed(poly)), t, modulus=q).factor_list()
    out = []
    for g, m in fl:
        c = [int(x) % q for x in reversed(g.all_coeffs())]
        inv = pow(c[-1], -1, q)
        out.append((tuple(x * inv % q for x in c), m))
    return sorted(out, key=lambda gm: (len(gm[0]), gm[0][::-1]))


@pytest.mark.parametrize("r", [7, 11, 13, 17, 19])
@pytest.mark.parametrize("q", [2, 3, 5, 29, 31, 37, 43, 47, 53, 1009])
def test_factorization_matches_sympy(r, q):
    psi = build_context(r).min_poly
    assert polymod.factor(psi, q) == _sympy_factor(psi, q)


def test_products_reconstruct():
    f = (3, 0, 5, 1, 0, 2, 1)
    for q in (2, 3, 7, 11):
        prod = (1,)
        for g, m in polymod.factor(f, q):
            for _ in range(m):
                prod = polymod.mul(prod, g, q)
        assert prod == polymod.monic(polymod.reduce_mod(f, q), q)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_multiplicity_divisible_by_characteristic(q):
    # (t + 1)^q (t + 2) and (t^2 + 1)^(2q) t
    f = polymod.mul(polymod.powmod((1, 1), q, (0,) * 20 + (1,), q), (2, 1), q)
    assert _sympy_factor(f, q) == polymod.factor(f, q)
    g = polymod.mul(polymod.powmod((1, 0, 1), 2 * q, (0,) * 40 + (1,), q), (0, 1), q)
    assert _sympy_factor(g, q) == polymod.factor(g, q)
