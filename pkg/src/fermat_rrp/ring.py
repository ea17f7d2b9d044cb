"""Exact arithmetic in the ring of integers of Q(zeta_r + zeta_r^-1).

Elements are integer coefficient vectors in the power basis 1, a, ..., a^(d-1)
of a = 2cos(2*pi/r), where d = (r-1)/2.  The ring Z[a] is the full ring of
integers, so this basis covers every algebraic integer of the field.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Tuple

from .errors import InvalidInputError
from .intmath import gcd, is_prime, vq


def chebyshev_polys(n):
    """Integer polynomials P_0..P_n with P_j(x + 1/x) = x^j + x^-j.

    Coefficient lists are low-degree first.  P_0 = 2, P_1 = t,
    P_{j+1} = t*P_j - P_{j-1}.
    """
    polys = [[2], [0, 1]]
    while len(polys) <= n:
        prev, cur = polys[-2], polys[-1]
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        polys.append(nxt)
    return polys[: n + 1]


def real_cyclotomic_minpoly(r):
    """Minimal polynomial of 2cos(2*pi/r), low-degree first.

    From Phi_r(x) / x^d = 1 + sum_{j=1..d} (x^j + x^-j) with t = x + 1/x.
    """
    d = (r - 1) // 2
    psi = [0] * (d + 1)
    psi[0] = 1
    for poly in chebyshev_polys(d)[1:]:
        for i, c in enumerate(poly):
            psi[i] += c
    return tuple(psi)


@dataclass(frozen=True, eq=False)
class RingContext:
    r: int
    degree: int
    min_poly: Tuple[int, ...]
    alpha_table: Tuple[Tuple[int, ...], ...] = field(repr=False)
    # rows t^d .. t^(2d-2) reduced mod min_poly
    _reduction: Tuple[Tuple[int, ...], ...] = field(repr=False)

    def element(self, coeffs):
        return RingElement.from_poly(self, coeffs)

    def zero(self):
        return RingElement(self, (0,) * self.degree)

    def one(self):
        return self.scalar(1)

    def scalar(self, n):
        return RingElement(self, (n,) + (0,) * (self.degree - 1))

    def alpha(self, j=1):
        return alpha_element(self, j)

    def reduce(self, poly):
        """Reduce an integer polynomial (low-degree first) mod min_poly."""
        d = self.degree
        out = list(poly[:d]) + [0] * max(0, d - len(poly))
        hi = list(poly[d:])
        # hi may exceed the precomputed table for very long inputs
        while len(hi) > d - 1:
            top = hi.pop()
            k = len(hi)  # exponent d + k, reduce via t^(d+k) = t^k * t^d
            for i in range(d):
                c = -self.min_poly[i] * top
                if k + i < d:
                    out[k + i] += c
                else:
                    hi[k + i - d] += c
        for k, c in enumerate(hi):
            if c:
                row = self._reduction[k]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)


@lru_cache(maxsize=None)
def build_context(r):
    """Build (and cache) the ring context for an odd prime r > 5."""
    if not isinstance(r, int) or not is_prime(r) or r <= 5:
        raise InvalidInputError(f"r must be a prime > 5, got {r!r}")
    d = (r - 1) // 2
    psi = real_cyclotomic_minpoly(r)

    # t^d = -(psi_0 + ... + psi_{d-1} t^{d-1})
    red = []
    cur = [-c for c in psi[:d]]
    red.append(tuple(cur))
    for _ in range(d - 2):
        top = cur[-1]
        cur = [0] + cur[:-1]
        for i in range(d):
            cur[i] -= top * psi[i]
        red.append(tuple(cur))

    ctx = RingContext(r, d, psi, (), tuple(red))
    table = []
    for poly in chebyshev_polys(d):
        table.append(ctx.reduce(poly))
    object.__setattr__(ctx, "alpha_table", tuple(table))
    return ctx


@dataclass(frozen=True)
class RingElement:
    ctx: RingContext = field(compare=False, repr=False)
    coeffs: Tuple[int, ...]

    @classmethod
    def from_poly(cls, ctx, poly):
        return cls(ctx, ctx.reduce(tuple(int(c) for c in poly)))

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ctx.r != self.ctx.r:
                raise InvalidInputError("elements from different fields")
            return other
        if isinstance(other, int):
            return self.ctx.scalar(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.scalar(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ctx.r == other.ctx.r and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.r, self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ctx, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ctx, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingElement(self.ctx, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.ctx, tuple(other * a for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        prod = [0] * (2 * len(a) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        return RingElement(self.ctx, self.ctx.reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers are not ring elements")
        result, base = self.ctx.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*a^{i}")
        return "RingElement(r={}, {})".format(self.ctx.r, " + ".join(terms) or "0")


def alpha_element(ctx, j):
    """alpha_j = zeta^j + zeta^-j as a ring element, 0 <= j <= (r-1)/2."""
    if not 0 <= j <= ctx.degree:
        raise InvalidInputError(f"alpha index {j} outside 0..{ctx.degree}")
    return RingElement(ctx, ctx.alpha_table[j])


def multiplication_matrix(a):
    """Columns are the coordinates of a * alpha^k, k = 0..d-1."""
    ctx = a.ctx
    cols = []
    cur = a
    x = RingElement(ctx, ctx.alpha_table[1])
    for _ in range(ctx.degree):
        cols.append(cur.coeffs)
        cur = cur * x
    return [[cols[k][i] for k in range(ctx.degree)] for i in range(ctx.degree)]


def bareiss_det(m):
    """Fraction-free determinant of a square integer matrix."""
    m = [list(row) for row in m]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def norm(a):
    """Field norm, the product of all Galois conjugates of a.

    Equal to Res(psi_r, a(t)) because psi_r is monic; computed as the
    determinant of multiplication by a.
    """
    return bareiss_det(multiplication_matrix(a))


def fold_index(i, r):
    """Representative of +-i mod r in [0, (r-1)/2]."""
    i %= r
    return min(i, r - i)


def galois_apply(a, i):
    """Image of a under the automorphism induced by zeta -> zeta^i."""
    ctx = a.ctx
    if gcd(i, ctx.r) != 1:
        raise InvalidInputError(f"{i} is not coprime to r={ctx.r}")
    image = alpha_element(ctx, fold_index(i, ctx.r))
    acc = ctx.zero()
    for c in reversed(a.coeffs):
        acc = acc * image + c
    return acc


def beta_valuation(a):
    """Valuation at the unique prime above r.

    That prime has residue degree 1 and no other prime of the field lies
    over r, so it is v_r of the norm.
    """
    if a.is_zero():
        raise InvalidInputError("beta-valuation of zero is infinite")
    return vq(norm(a), a.ctx.r)


def evaluate_poly_at(poly, a):
    """Evaluate an integer polynomial (low-degree first) at ring element a."""
    acc = a.ctx.zero()
    for c in reversed(poly):
        acc = acc * a + c
    return acc
