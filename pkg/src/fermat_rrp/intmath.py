"""Rational-integer helpers: primality, valuations, factorization, roots."""

import math
import os
from functools import lru_cache

import sympy

from .errors import DeskScaleError

_TRIAL_LIMIT = 1 << 16


@lru_cache(maxsize=1)
def _small_primes():
    return tuple(sympy.primerange(2, _TRIAL_LIMIT))


def max_cofactor_bits():
    return int(os.environ.get("FERMAT_RRP_MAX_COFACTOR_BITS", "128"))


def is_prime(n):
    return n >= 2 and bool(sympy.isprime(n))


def vq(n, q):
    """q-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of zero is infinite")
    n = abs(n)
    k = 0
    while n % q == 0:
        n //= q
        k += 1
    return k


def factor_integer(n):
    """Factor |n| into {prime: exponent}.

    Trial division first; whatever survives must be prime or at most
    ``FERMAT_RRP_MAX_COFACTOR_BITS`` bits before it is handed to a general
    factorizer.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out = {}
    for q in _small_primes():
        if q * q > n:
            break
        if n % q == 0:
            k = 0
            while n % q == 0:
                n //= q
                k += 1
            out[q] = k
    if n == 1:
        return out
    if not is_prime(n) and n.bit_length() > max_cofactor_bits():
        raise DeskScaleError(
            f"cofactor {n} ({n.bit_length()} bits) exceeds the desk-scale "
            f"limit of {max_cofactor_bits()} bits; raise FERMAT_RRP_MAX_COFACTOR_BITS to allow it"
        )
    for q, k in sympy.factorint(n).items():
        out[q] = out.get(q, 0) + k
    return dict(sorted(out.items()))


def integer_root(n, k):
    """Return the integer k-th root of n if n is a perfect k-th power, else None.

    Negative n is allowed for odd k.
    """
    if n < 0:
        if k % 2 == 0:
            return None
        s = integer_root(-n, k)
        return None if s is None else -s
    root, exact = sympy.integer_nthroot(n, k)
    return int(root) if exact else None


def is_pth_power_free(n, p):
    """True when no prime occurs in n to exponent >= p."""
    return all(e < p for e in factor_integer(n).values())


def is_power_of(n, q):
    """True when |n| = q^k for some k >= 0."""
    n = abs(n)
    if n == 0:
        return False
    while n % q == 0:
        n //= q
    return n == 1


def xgcd(a, b):
    """Return (g, u, v) with u*a + v*b = g = gcd(a, b) >= 0."""
    u0, v0, u1, v1 = 1, 0, 0, 1
    while b:
        t = a // b
        a, b = b, a - t * b
        u0, u1 = u1, u0 - t * u1
        v0, v1 = v1, v0 - t * v1
    if a < 0:
        return -a, -u0, -v0
    return a, u0, v0


gcd = math.gcd
