"""Dense univariate polynomials over F_q and their factorization.

Polynomials are tuples of residues, lowest degree first, with no trailing
zeros (the zero polynomial is the empty tuple).  Factorization is
distinct-degree followed by Cantor-Zassenhaus equal-degree splitting; for
q = 2 the splitting uses the trace map instead of the quadratic character.
"""

import random


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def reduce_mod(f, q):
    return trim(c % q for c in f)


def deg(f):
    return len(f) - 1


def add(f, g, q):
    n = max(len(f), len(g))
    return trim(((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % q for i in range(n))


def sub(f, g, q):
    n = max(len(f), len(g))
    return trim(((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % q for i in range(n))


def mul(f, g, q):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return reduce_mod(out, q)


def divmod_poly(f, g, q):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    inv = pow(g[-1], -1, q)
    dg = deg(g)
    if len(f) <= dg:
        return (), trim(f)
    quot = [0] * (len(f) - dg)
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k] * inv % q
        if c:
            quot[k - dg] = c
            for i, b in enumerate(g):
                f[k - dg + i] = (f[k - dg + i] - c * b) % q
    return trim(quot), trim(f[:dg])


def rem(f, g, q):
    return divmod_poly(f, g, q)[1]


def monic(f, q):
    if not f:
        return f
    inv = pow(f[-1], -1, q)
    return tuple(c * inv % q for c in f)


def gcd(f, g, q):
    while g:
        f, g = g, rem(f, g, q)
    return monic(f, q)


def derivative(f, q):
    return trim(i * c % q for i, c in enumerate(f) if i)


def powmod(f, n, m, q):
    result = (1,)
    base = rem(f, m, q)
    while n:
        if n & 1:
            result = rem(mul(result, base, q), m, q)
        base = rem(mul(base, base, q), m, q)
        n >>= 1
    return result


X = (0, 1)


def distinct_degree(f, q):
    """Split a monic squarefree f into (degree, product-of-factors) pairs."""
    out = []
    h = X
    i = 0
    while deg(f) >= 2 * (i + 1):
        i += 1
        h = powmod(h, q, f, q)
        g = gcd(sub(h, X, q), f, q)
        if deg(g) > 0:
            out.append((i, g))
            f = divmod_poly(f, g, q)[0]
            h = rem(h, f, q)
    if deg(f) > 0:
        out.append((deg(f), f))
    return out


def _split_candidate(a, k, f, q):
    if q == 2:
        t = a
        acc = a
        for _ in range(k - 1):
            t = rem(mul(t, t, q), f, q)
            acc = add(acc, t, q)
        return acc
    return sub(powmod(a, (q ** k - 1) // 2, f, q), (1,), q)


def equal_degree(f, k, q, rng):
    """Split a monic product of distinct degree-k irreducibles."""
    if deg(f) == k:
        return [f]
    n = deg(f)
    while True:
        a = trim(rng.randrange(q) for _ in range(n))
        if deg(a) < 1:
            continue
        g = gcd(_split_candidate(a, k, f, q), f, q)
        if 0 < deg(g) < n:
            h = divmod_poly(f, g, q)[0]
            return equal_degree(g, k, q, rng) + equal_degree(monic(h, q), k, q, rng)


def _pth_root(f, q):
    # coefficients of F_q are fixed by Frobenius, so only the exponents shrink
    return trim(f[i] for i in range(0, len(f), q))


def _irreducible_support(f, q, rng):
    """Distinct monic irreducible factors of a monic f."""
    if deg(f) < 1:
        return []
    df = derivative(f, q)
    if not df:
        return _irreducible_support(_pth_root(f, q), q, rng)
    g = gcd(f, df, q)
    sqfree = monic(divmod_poly(f, g, q)[0], q)
    found = []
    for k, h in distinct_degree(sqfree, q):
        found.extend(equal_degree(h, k, q, rng))
    # what is left of g only holds factors whose multiplicity is divisible by q
    for h in found:
        while True:
            quot, r = divmod_poly(g, h, q)
            if r:
                break
            g = quot
    return found + _irreducible_support(monic(g, q), q, rng)


def factor(f, q, seed=0):
    """Factor f over F_q into [(monic irreducible, multiplicity), ...].

    Output is sorted by (degree, coefficients).
    """
    f = monic(reduce_mod(f, q), q)
    if deg(f) < 1:
        return []
    rng = random.Random(seed)
    out = []
    for g in _irreducible_support(f, q, rng):
        m = 0
        rest = f
        while True:
            quot, r = divmod_poly(rest, g, q)
            if r:
                break
            rest = quot
            m += 1
        out.append((g, m))
    return sorted(out, key=lambda gm: (deg(gm[0]), gm[0][::-1]))
