"""Factoring x^r + y^r over O_K and tracking where beta and D live.

Over the real subfield, x^r + y^r = (x + y) * prod_{j=1..d} f_j with
f_j = x^2 + y^2 + alpha_j*x*y.  The sign in front of alpha_j is forced by
(x + zeta^j y)(x + zeta^-j y) = x^2 + alpha_j xy + y^2.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Tuple

from .errors import DecompositionError, InvalidInputError
from .ideals import (
    PrimeIdeal,
    beta_ideal,
    element_valuation,
    factor_rational_prime,
    ideal_product,
    ideal_sum,
    principal_ideal,
    rational_ideal,
    reconstruct,
    unit_ideal,
    valuation_at,
)
from .intmath import factor_integer, gcd, is_pth_power_free, is_prime, is_power_of, vq
from .ring import RingContext, RingElement, alpha_element, beta_valuation, build_context, norm


@dataclass(frozen=True)
class SolutionContext:
    """A putative solution of x^r + y^r = D z^p, validated on construction."""

    r: int
    x: int
    y: int
    p: int
    D: int
    z: int

    def __post_init__(self):
        build_context(self.r)
        if (self.x, self.y) == (0, 0):
            raise InvalidInputError("x and y are both zero")
        if gcd(self.x, self.y) != 1:
            raise InvalidInputError(f"x={self.x} and y={self.y} are not coprime")
        if not is_prime(self.p) or self.p < 5:
            raise InvalidInputError(f"p must be a prime >= 5, got {self.p}")
        if self.p == self.r:
            raise InvalidInputError("p must differ from r")
        if self.D == 0:
            raise InvalidInputError("D must be nonzero")
        if gcd(self.D, self.r) != 1:
            raise InvalidInputError(f"gcd(D, r) != 1 for D={self.D}")
        if not is_pth_power_free(self.D, self.p):
            raise InvalidInputError(f"D={self.D} contains a {self.p}-th power")
        if self.D * self.z ** self.p != self.x ** self.r + self.y ** self.r:
            raise InvalidInputError("x^r + y^r != D z^p")

    @property
    def is_trivial(self):
        return abs(self.x * self.y * self.z) <= 1

    @property
    def r_divides_z(self):
        return self.z != 0 and self.z % self.r == 0

    @property
    def k(self):
        """v_r(z), or 0 when z = 0."""
        return vq(self.z, self.r) if self.z else 0


@dataclass(frozen=True)
class FactorProfile:
    ctx: RingContext = field(repr=False)
    x: int
    y: int
    # factors[0] = (x + y)^2, factors[j] = f_j for j >= 1
    factors: Tuple[RingElement, ...] = field(repr=False)
    beta_vals: Tuple[Optional[int], ...]
    e: int
    # v_r(x + y); the beta-side exponent is degree * e0
    e0: Optional[int]

    @property
    def r(self):
        return self.ctx.r

    @property
    def value(self):
        return self.x ** self.r + self.y ** self.r

    @property
    def x_plus_y_beta(self):
        return None if self.e0 is None else self.ctx.degree * self.e0

    def product_identity(self):
        prod = self.ctx.scalar(self.x + self.y)
        for f in self.factors[1:]:
            prod = prod * f
        return prod == self.ctx.scalar(self.value)


def build_factors(ctx, x, y):
    if (x, y) == (0, 0):
        raise InvalidInputError("x and y are both zero")
    if gcd(x, y) != 1:
        raise InvalidInputError(f"x={x} and y={y} are not coprime")
    s = x * x + y * y
    factors = [ctx.scalar((x + y) ** 2)]
    for j in range(1, ctx.degree + 1):
        factors.append(alpha_element(ctx, j) * (x * y) + s)
    beta_vals = tuple(None if f.is_zero() else beta_valuation(f) for f in factors)
    e = beta_vals[1]
    e0 = vq(x + y, ctx.r) if x + y else None
    return FactorProfile(ctx, x, y, tuple(factors), beta_vals, e, e0)


@dataclass(frozen=True)
class CoprimalityReport:
    pairs: Tuple[Tuple[int, int, int], ...]  # (i, j, norm of the ideal gcd)
    r: int

    @property
    def ok(self):
        return all(is_power_of(n, self.r) for _, _, n in self.pairs)


def verify_pairwise_coprimality(profile):
    """Norm of gcd((f_i), (f_j)) for all i < j; (x + y)^2 included when nonzero."""
    ideals = {}
    for j, f in enumerate(profile.factors):
        if not f.is_zero():
            ideals[j] = principal_ideal(f)
    idx = sorted(ideals)
    pairs = []
    for a in range(len(idx)):
        for b in range(a + 1, len(idx)):
            i, j = idx[a], idx[b]
            pairs.append((i, j, ideal_sum(ideals[i], ideals[j]).norm))
    return CoprimalityReport(tuple(pairs), profile.r)


@dataclass(frozen=True)
class FactorPart:
    """(element) = I^p * Dpart * base^exponent for one factor.

    For index 0 the element is x + y and the base is (r); for j >= 1 it is
    f_j and the base is beta.
    """

    index: int
    element: RingElement = field(repr=False)
    i_primes: Tuple[Tuple[PrimeIdeal, int], ...]
    d_primes: Tuple[Tuple[PrimeIdeal, int], ...]
    base_exponent: int

    def i_ideal(self, ctx):
        return reconstruct(ctx, self.i_primes)

    def d_ideal(self, ctx):
        return reconstruct(ctx, self.d_primes)


@dataclass(frozen=True)
class FactorDecomposition:
    ctx: RingContext = field(repr=False)
    D: int
    p: int
    parts: Tuple[FactorPart, ...]

    @property
    def e(self):
        return self.parts[1].base_exponent

    @property
    def e0(self):
        return self.parts[0].base_exponent

    def reconstruction_ok(self):
        ctx = self.ctx
        beta = beta_ideal(ctx).as_lattice
        for part in self.parts:
            base = rational_ideal(ctx, ctx.r) if part.index == 0 else beta
            lhs = ideal_product(
                ideal_product(_power(part.i_ideal(ctx), self.p), part.d_ideal(ctx)),
                _power(base, part.base_exponent),
            )
            if lhs != principal_ideal(part.element):
                return False
        return True

    def i_parts_coprime(self):
        ctx = self.ctx
        beta = beta_ideal(ctx)
        ideals = [part.i_ideal(ctx) for part in self.parts]
        for a in range(len(ideals)):
            if valuation_at(beta, ideals[a]) != 0:
                return False
            for b in range(a + 1, len(ideals)):
                if not ideal_sum(ideals[a], ideals[b]).is_unit():
                    return False
        return True

    def d_product_ok(self):
        prod = unit_ideal(self.ctx)
        for part in self.parts:
            prod = ideal_product(prod, part.d_ideal(self.ctx))
        return prod == rational_ideal(self.ctx, self.D)


def _power(A, k):
    result = unit_ideal(A.ctx)
    for _ in range(k):
        result = ideal_product(result, A)
    return result


@lru_cache(maxsize=1024)
def _cached_factor(n):
    return factor_integer(n)


def _prime_support(ctx, a):
    """(P, v_P(a)) for every prime P != beta dividing the nonzero element a."""
    out = []
    for q in _cached_factor(abs(norm(a))):
        if q == ctx.r:
            continue
        for P, _ in factor_rational_prime(ctx, q):
            v = element_valuation(P, a)
            if v:
                out.append((P, v))
    return out


def _split(index, support, D, p):
    i_primes, d_primes = [], []
    for P, v in support:
        d_exp = vq(D, P.q) * P.e if D % P.q == 0 else 0
        rest = v - d_exp
        if rest < 0 or rest % p:
            raise DecompositionError(index, P.q, P.gen_poly, v, p)
        if d_exp:
            d_primes.append((P, d_exp))
        if rest:
            i_primes.append((P, rest // p))
    return tuple(i_primes), tuple(d_primes)


def decompose_factors(profile, D, p):
    """Split (x + y) and each (f_j) into I^p, D-part and beta-part.

    A prime P != beta divides exactly one factor, so its exponent there is
    v_q(D) + p * v_q(z) when q | D and p * v_q(z) otherwise.  Anything else
    raises DecompositionError.
    """
    ctx = profile.ctx
    if D == 0:
        raise InvalidInputError("D must be nonzero")
    if profile.x + profile.y == 0:
        raise InvalidInputError("x + y = 0 has no decomposition")
    parts = []
    s = profile.x + profile.y
    support = []
    for q, k in _cached_factor(abs(s)).items():
        if q == ctx.r:
            continue
        for P, e in factor_rational_prime(ctx, q):
            support.append((P, k * e))
    i_primes, d_primes = _split(0, support, D, p)
    parts.append(FactorPart(0, ctx.scalar(s), i_primes, d_primes, profile.e0))
    for j in range(1, ctx.degree + 1):
        f = profile.factors[j]
        i_primes, d_primes = _split(j, _prime_support(ctx, f), D, p)
        parts.append(FactorPart(j, f, i_primes, d_primes, profile.beta_vals[j]))
    return FactorDecomposition(ctx, D, p, tuple(parts))


def valuation_balance_check(profile, D, p, z):
    """v_beta(D z^p) equals v_beta(x + y) + sum_{j>=1} v_beta(f_j)."""
    if D == 0 or z == 0 or profile.e0 is None:
        return False
    d = profile.ctx.degree
    lhs = d * vq(D, profile.r) + p * d * vq(z, profile.r)
    rhs = profile.x_plus_y_beta + sum(profile.beta_vals[1:])
    return lhs == rhs
