"""Integral ideals of O_K as full-rank integer lattices in Hermite normal form.

The basis is stored as d row vectors forming an upper-triangular matrix
with positive diagonal; entries above a pivot are reduced into
[0, pivot).  Every nonzero integral ideal contains its norm, so each HNF
computation runs modulo a known multiple of the lattice determinant and
coefficients stay bounded.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Tuple

from . import polymod
from .errors import InvalidInputError
from .intmath import factor_integer, gcd, is_prime, vq, xgcd
from .ring import RingContext, RingElement, evaluate_poly_at, norm


def hnf(vectors, d, modulus):
    """Row HNF of the lattice spanned by ``vectors`` plus modulus * Z^d."""
    if modulus == 0:
        raise ValueError("modulus must be nonzero")
    m = abs(modulus)
    rows = [[c % m for c in v] for v in vectors]
    rows += [[m if i == j else 0 for j in range(d)] for i in range(d)]
    basis = []
    for col in range(d):
        rows = [row for row in rows if any(row)]
        pivot = None
        rest = []
        for row in rows:
            if row[col] == 0:
                rest.append(row)
                continue
            if pivot is None:
                pivot = row
                continue
            a, b = pivot[col], row[col]
            g, u, v = xgcd(a, b)
            ag, bg = a // g, b // g
            new_pivot = [u * x + v * y for x, y in zip(pivot, row)]
            new_row = [ag * y - bg * x for x, y in zip(pivot, row)]
            pivot = new_pivot
            rest.append(new_row)
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        # m*e_j lies in what remains for j > col, so reducing mod m is a row op
        for j in range(col + 1, d):
            pivot[j] %= m
        rest = [[x % m if j > col else x for j, x in enumerate(row)] for row in rest]
        rest += [[m if i == j else 0 for j in range(d)] for i in range(col + 1, d)]
        basis.append(pivot)
        rows = rest
    # left to right: subtracting row i only touches columns >= i
    for i in range(1, d):
        h = basis[i][i]
        for k in range(i):
            t = basis[k][i] // h
            if t:
                basis[k] = [x - t * y for x, y in zip(basis[k], basis[i])]
    return tuple(tuple(row) for row in basis)


@dataclass(frozen=True)
class IdealHNF:
    ctx: RingContext = field(compare=False, repr=False)
    basis: Tuple[Tuple[int, ...], ...]

    def __eq__(self, other):
        if not isinstance(other, IdealHNF):
            return NotImplemented
        return self.ctx.r == other.ctx.r and self.basis == other.basis

    def __hash__(self):
        return hash((self.ctx.r, self.basis))

    @property
    def norm(self):
        n = 1
        for i, row in enumerate(self.basis):
            n *= row[i]
        return n

    def contains(self, a):
        """Membership of a ring element (or raw coordinate vector)."""
        v = list(a.coeffs if isinstance(a, RingElement) else a)
        for i, row in enumerate(self.basis):
            if v[i] % row[i]:
                return False
            t = v[i] // row[i]
            if t:
                v = [x - t * y for x, y in zip(v, row)]
        return True

    def contains_ideal(self, other):
        return all(self.contains(row) for row in other.basis)

    def is_unit(self):
        return self.norm == 1

    def generators(self):
        return [RingElement(self.ctx, row) for row in self.basis]

    def __mul__(self, other):
        return ideal_product(self, other)

    def __add__(self, other):
        return ideal_sum(self, other)


def _check_same(A, B):
    if A.ctx.r != B.ctx.r:
        raise InvalidInputError("ideals from different fields")


def ideal_from_elements(ctx, elements, modulus):
    """Ideal generated (as an O_K-module) by elements; modulus must lie in it."""
    x = RingElement(ctx, ctx.alpha_table[1])
    vectors = []
    for a in elements:
        cur = a
        for _ in range(ctx.degree):
            vectors.append(cur.coeffs)
            cur = cur * x
    return IdealHNF(ctx, hnf(vectors, ctx.degree, modulus))


def unit_ideal(ctx):
    return IdealHNF(ctx, hnf([], ctx.degree, 1))


def principal_ideal(a):
    if isinstance(a, RingElement) and a.is_zero():
        raise InvalidInputError("the zero ideal is not supported")
    n = norm(a)
    return ideal_from_elements(a.ctx, [a], n)


def rational_ideal(ctx, n):
    """The ideal n*O_K."""
    if n == 0:
        raise InvalidInputError("the zero ideal is not supported")
    return IdealHNF(ctx, hnf([], ctx.degree, n))


def ideal_sum(A, B):
    _check_same(A, B)
    return IdealHNF(A.ctx, hnf(A.basis + B.basis, A.ctx.degree, gcd(A.norm, B.norm)))


def ideal_product(A, B):
    _check_same(A, B)
    ctx = A.ctx
    ga, gb = A.generators(), B.generators()
    vectors = [(a * b).coeffs for a in ga for b in gb]
    return IdealHNF(ctx, hnf(vectors, ctx.degree, A.norm * B.norm))


def ideal_power(A, k):
    result = unit_ideal(A.ctx)
    for _ in range(k):
        result = ideal_product(result, A)
    return result


@dataclass(frozen=True)
class PrimeIdeal:
    q: int
    gen_poly: Tuple[int, ...]
    e: int
    f: int
    as_lattice: IdealHNF = field(compare=False, repr=False)

    @property
    def ctx(self):
        return self.as_lattice.ctx

    @property
    def r(self):
        return self.as_lattice.ctx.r

    def __hash__(self):
        return hash((self.r, self.q, self.gen_poly))

    def __eq__(self, other):
        if not isinstance(other, PrimeIdeal):
            return NotImplemented
        return (self.r, self.q, self.gen_poly) == (other.r, other.q, other.gen_poly)

    @property
    def norm(self):
        return self.q ** self.f

    def is_beta(self):
        return self.q == self.r

    def label(self):
        return {"q": str(self.q), "gen_poly": [str(c) for c in self.gen_poly], "e": self.e, "f": self.f}


@lru_cache(maxsize=None)
def factor_rational_prime(ctx, q):
    """Prime ideals above q with exponents, as a tuple of (PrimeIdeal, e).

    O_K = Z[alpha], so the primes above q come from the factorization of
    the minimal polynomial mod q with no index obstruction.
    """
    if not is_prime(q):
        raise InvalidInputError(f"{q} is not prime")
    out = []
    for g, e in polymod.factor(ctx.min_poly, q):
        gen = evaluate_poly_at(g, RingElement(ctx, ctx.alpha_table[1]))
        lattice = ideal_from_elements(ctx, [ctx.scalar(q), gen], q)
        out.append((PrimeIdeal(q, tuple(g), e, polymod.deg(g), lattice), e))
    return tuple(out)


def beta_ideal(ctx):
    ((beta, _),) = factor_rational_prime(ctx, ctx.r)
    return beta


@lru_cache(maxsize=4096)
def prime_power(P, k):
    if k == 0:
        return unit_ideal(P.ctx)
    return ideal_product(prime_power(P, k - 1), P.as_lattice)


def valuation_at(P, A):
    """Largest k with A contained in P^k."""
    if A.norm == 0:
        raise InvalidInputError("zero ideal")
    bound = vq(A.norm, P.q) // P.f
    k = 0
    while k < bound and prime_power(P, k + 1).contains_ideal(A):
        k += 1
    return k


def element_valuation(P, a):
    """v_P of a nonzero ring element; a lies in P^k iff (a) does."""
    if a.is_zero():
        raise InvalidInputError("valuation of zero is infinite")
    bound = vq(norm(a), P.q) // P.f
    k = 0
    while k < bound and prime_power(P, k + 1).contains(a):
        k += 1
    return k


def primes_dividing(ctx, a):
    """Prime ideals dividing a nonzero element, with their exponents."""
    out = []
    for q in factor_integer(norm(a)):
        for P, _ in factor_rational_prime(ctx, q):
            v = element_valuation(P, a)
            if v:
                out.append((P, v))
    return out


def reconstruct(ctx, factors):
    """Product of P^k over (P, k) pairs."""
    result = unit_ideal(ctx)
    for P, k in factors:
        if k:
            result = ideal_product(result, prime_power(P, k))
    return result
