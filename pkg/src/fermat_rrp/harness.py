"""End-to-end commands: analyze, contexts, fixture-type2, search, sweep.

Every command returns plain JSON-ready data.  Integers that can grow with
the input (x, y, z, D, norms, coordinates) are emitted as decimal strings;
small structural integers (r, p, valuations, exponents) stay numbers.
"""

import itertools
import json
import os
import random
from concurrent.futures import ProcessPoolExecutor
from typing import NamedTuple

from .errors import (
    DecompositionError,
    DeskScaleError,
    InvalidInputError,
    NoValidContextError,
)
from .factorization import (
    SolutionContext,
    build_factors,
    decompose_factors,
    valuation_balance_check,
    verify_pairwise_coprimality,
)
from .frey import (
    CurveKind,
    ReductionKind,
    bad_primes,
    eichler_shimura_condition,
    frey_type1,
    frey_type2,
    inertia_criterion,
    j_beta_valuation,
    j_lambda_check,
    level_data,
    weierstrass_invariants,
)
from .ideals import factor_rational_prime, rational_ideal, reconstruct
from .intmath import factor_integer, gcd, integer_root, is_prime, is_pth_power_free, vq
from .ring import alpha_element, beta_valuation, build_context

SCHEMA_VERSION = "1.0"

LARGE_P_CONCLUSIONS = (
    "modularity of the Frey curve",
    "irreducibility of the mod p representation",
    "level lowering to N_p",
    "semistability at primes above p (needs p > r)",
)


def max_bound():
    return int(os.environ.get("FERMAT_RRP_MAX_BOUND", "200"))


def to_json(data):
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _s(n):
    return str(n)


def _element(a):
    return [_s(c) for c in a.coeffs]


def _ideal(A):
    return {"norm": _s(A.norm), "basis": [[_s(c) for c in row] for row in A.basis]}


def _check_p(r, p):
    if not is_prime(p) or p < 5:
        raise InvalidInputError(f"p must be a prime >= 5, got {p}")
    if p == r:
        raise InvalidInputError("p must differ from r")


def _check_bound(bound):
    if bound < 0:
        raise InvalidInputError("bound must be >= 0")
    if bound > max_bound():
        raise DeskScaleError(
            f"bound {bound} exceeds {max_bound()}; raise FERMAT_RRP_MAX_BOUND to allow it"
        )


def _check_pair(x, y):
    if (x, y) == (0, 0):
        raise InvalidInputError("x and y are both zero")
    if gcd(x, y) != 1:
        raise InvalidInputError(f"x={x} and y={y} are not coprime")


class Context(NamedTuple):
    D: int
    z: int
    valid: bool


def cmd_contexts(r, x, y, p):
    """All (D, z) with z >= 1, z^p | x^r + y^r and D = (x^r + y^r) / z^p.

    ``valid`` marks the pairs with gcd(D, r) = 1 and D free of p-th powers.
    """
    build_context(r)
    _check_pair(x, y)
    _check_p(r, p)
    V = x ** r + y ** r
    if V == 0:
        raise InvalidInputError("x = -y gives x^r + y^r = 0; no (D, z) to enumerate")
    ranges = [
        [q ** i for i in range(e // p + 1)] for q, e in factor_integer(V).items()
    ]
    out = []
    for combo in itertools.product(*ranges):
        z = 1
        for c in combo:
            z *= c
        D = V // z ** p
        valid = gcd(D, r) == 1 and is_pth_power_free(D, p)
        out.append(Context(D, z, valid))
    return sorted(out, key=lambda c: c.z)


def contexts_report(r, x, y, p):
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "contexts",
        "input": {"r": r, "x": _s(x), "y": _s(y), "p": p},
        "contexts": [{"D": _s(c.D), "z": _s(c.z), "valid": c.valid} for c in cmd_contexts(r, x, y, p)],
    }


def cmd_fixture_type2(r, p, k, seed=0):
    """A coprime pair with v_r(x + y) = pk - 1 and r not dividing xy.

    Seed 0 is the canonical choice x = r^(pk-1) + 1, y = -1; other seeds
    scale the r-power by a multiplier prime to r.
    """
    build_context(r)
    if not is_prime(p) or p == r:
        raise InvalidInputError(f"p must be a prime different from r, got {p}")
    if k < 1:
        raise InvalidInputError("k must be >= 1")
    a = 1
    if seed:
        rng = random.Random(seed)
        a = rng.randrange(2, 100)
        while a % r == 0:
            a = rng.randrange(2, 100)
    return a * r ** (p * k - 1) + 1, -1


def fixture_report(r, p, k, seed=0):
    x, y = cmd_fixture_type2(r, p, k, seed)
    V = x ** r + y ** r
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "fixture-type2",
        "input": {"r": r, "p": p, "k": k, "seed": seed},
        "x": _s(x),
        "y": _s(y),
        "v_r_x_plus_y": vq(x + y, r),
        "v_r_value": vq(V, r),
    }


def _resolve_context(r, x, y, p, D, z):
    V = x ** r + y ** r
    if D is None and z is None:
        valid = [c for c in cmd_contexts(r, x, y, p) if c.valid]
        if not valid:
            raise NoValidContextError(
                f"no (D, z) makes x^r + y^r = {V} a valid context for p={p}"
            )
        return valid[0].D, valid[0].z
    if z is None:
        if D == 0 or V % D:
            raise InvalidInputError(f"D={D} does not divide x^r + y^r = {V}")
        z = integer_root(V // D, p)
        if z is None:
            raise InvalidInputError(f"(x^r + y^r)/D is not a {p}-th power")
        return D, z
    if D is None:
        if z == 0 or V % z ** p:
            raise InvalidInputError(f"z^p does not divide x^r + y^r = {V}")
        return V // z ** p, z
    return D, z


def _curve_section(curve, p, k, D, decomposition):
    data = {
        "A": _element(curve.A),
        "B": _element(curve.B),
        "C": _element(curve.C),
        "beta_valuations": curve.beta_valuations(),
    }
    ld = level_data(curve, D, p)
    data["level_data"] = {
        "beta_exponent_range": list(ld.beta_exponent_range),
        "two_adic_ranges": [dict(P.label(), range=list(rng)) for P, rng in ld.two_adic_ranges],
        "d_radical": _ideal(ld.d_radical),
        "d_primes": [P.label() for P in ld.d_primes],
        "mp_primes": [red.as_dict() for red in ld.mp_primes],
        "d_radical_divides_rad_D": ld.divides_rad_D,
    }
    data["multiplicative_primes"] = [red.as_dict() for red in ld.multiplicative_primes]
    data["additive_primes"] = [red.as_dict() for red in ld.additive_primes]

    i_primes = set()
    if decomposition is not None:
        for part in decomposition.parts:
            i_primes.update(P for P, _ in part.i_primes)
    mp_set = {red.prime for red in ld.mp_primes}
    bad_set = {red.prime for red in ld.multiplicative_primes} | {red.prime for red in ld.additive_primes}
    data["semistable_away_from_2beta"] = not ld.additive_primes
    data["p_divides_disc_valuation_at_I_primes"] = (
        all(red.disc_valuation % p == 0 and red.c4_valuation == 0 for red in ld.mp_primes)
        and all(P in mp_set for P in i_primes if P in bad_set)
    )
    data["j_lambda"] = j_lambda_check(curve)
    if curve.kind is CurveKind.TYPE2:
        v = j_beta_valuation(curve, p, k)
        data["j_beta_valuation"] = v
        data["inertia_criterion"] = inertia_criterion(v, p)
    else:
        data["j_beta_valuation"] = beta_valuation(curve.j.numerator) - beta_valuation(curve.j.denominator)
    return data, ld


def cmd_analyze(r, x, y, p, D=None, z=None):
    """Full report for one putative solution of x^r + y^r = D z^p."""
    ctx = build_context(r)
    _check_pair(x, y)
    _check_p(r, p)
    D, z = _resolve_context(r, x, y, p, D, z)
    sol = SolutionContext(r, x, y, p, D, z)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "input": {"r": r, "x": _s(x), "y": _s(y), "p": p, "D": _s(D), "z": _s(z)},
        "is_trivial": sol.is_trivial,
        "r_divides_z": sol.r_divides_z,
        "requires_large_p": list(LARGE_P_CONCLUSIONS),
    }
    if sol.is_trivial or x + y == 0:
        report["analysis"] = None
        return report

    profile = build_factors(ctx, x, y)
    cop = verify_pairwise_coprimality(profile)
    analysis = {
        "factor_profile": {
            "factors": [
                {"j": j, "element": _element(f), "beta_valuation": profile.beta_vals[j]}
                for j, f in enumerate(profile.factors)
            ],
            "e": profile.e,
            "e0": profile.e0,
            "x_plus_y_beta_valuation": profile.x_plus_y_beta,
            "product_identity": profile.product_identity(),
        },
        "coprimality": {
            "pairs": [{"i": i, "j": j, "gcd_norm": _s(n)} for i, j, n in cop.pairs],
            "ok": cop.ok,
        },
        "valuation_balance": valuation_balance_check(profile, D, p, z),
    }
    try:
        dec = decompose_factors(profile, D, p)
    except DecompositionError as exc:
        dec = None
        analysis["decomposition"] = {"ok": False, "diagnostic": exc.as_dict()}
    else:
        analysis["decomposition"] = {
            "ok": True,
            "e": dec.e,
            "e0": dec.e0,
            "parts": [
                {
                    "index": part.index,
                    "base_exponent": part.base_exponent,
                    "i_primes": [dict(P.label(), exponent=k) for P, k in part.i_primes],
                    "d_primes": [dict(P.label(), exponent=k) for P, k in part.d_primes],
                }
                for part in dec.parts
            ],
            "reconstruction_ok": dec.reconstruction_ok(),
            "i_parts_coprime": dec.i_parts_coprime(),
            "d_product_ok": dec.d_product_ok(),
        }

    curves = {}
    curves["type1"], _ = _curve_section(frey_type1(profile), p, sol.k, D, dec)
    if sol.r_divides_z:
        curves["type2"], _ = _curve_section(frey_type2(profile, p, z), p, sol.k, D, dec)
    else:
        curves["type2"] = None
    analysis["curves"] = curves

    if r % 4 == 3:
        used = "type1"
    elif sol.r_divides_z:
        used = "type2"
    else:
        used = None
    es = eichler_shimura_condition(r, p)
    analysis["checklist"] = {
        "curve_for_argument": used,
        "semistable_away_from_2beta": all(
            c["semistable_away_from_2beta"] for c in curves.values() if c is not None
        ),
        "p_divides_disc_valuation_at_I_primes": all(
            c["p_divides_disc_valuation_at_I_primes"] for c in curves.values() if c is not None
        ),
        "type2_applicable": sol.r_divides_z,
        "inertia_criterion": curves["type2"]["inertia_criterion"] if curves["type2"] else None,
        "eichler_shimura_condition": es,
        "odd_degree_field": ctx.degree % 2 == 1,
    }
    report["analysis"] = analysis
    return report


def cmd_search(r, D, p, bound):
    """Scan coprime |x|, |y| <= bound for (x^r + y^r)/D a perfect p-th power."""
    build_context(r)
    if not is_prime(p):
        raise InvalidInputError(f"p must be prime, got {p}")
    if D == 0:
        raise InvalidInputError("D must be nonzero")
    _check_bound(bound)
    trivial, nontrivial = [], []
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if (x, y) == (0, 0) or gcd(x, y) != 1:
                continue
            V = x ** r + y ** r
            if V % D:
                continue
            z = integer_root(V // D, p)
            if z is None:
                continue
            hit = (x, y, z)
            (trivial if abs(x * y * z) <= 1 else nontrivial).append(hit)
    return trivial, nontrivial


def search_report(r, D, p, bound):
    trivial, nontrivial = cmd_search(r, D, p, bound)

    def rows(hits):
        return [{"x": _s(x), "y": _s(y), "z": _s(z)} for x, y, z in hits]

    return {
        "schema_version": SCHEMA_VERSION,
        "command": "search",
        "input": {"r": r, "D": _s(D), "p": p, "bound": bound},
        "trivial": rows(trivial),
        "nontrivial": rows(nontrivial),
    }


def coprime_pairs(bound):
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if (x, y) != (0, 0) and gcd(x, y) == 1:
                yield x, y


def beta_profile_holds(profile):
    vals = profile.beta_vals[1:]
    expected = 1 if (profile.x + profile.y) % profile.r == 0 else 0
    return all(v == expected for v in vals)


def invariants_hold(curve):
    c4, c6, disc = weierstrass_invariants(*curve.weierstrass_coefficients())
    return (
        (c4, c6, disc) == (curve.c4, curve.c6, curve.disc)
        and curve.c4 ** 3 - curve.c6 ** 2 == 1728 * curve.disc
    )


def reduction_shape_holds(curve):
    return all(
        red.kind is ReductionKind.MULTIPLICATIVE and red.c4_valuation == 0
        for red in bad_primes(curve)
    )


PAIR_CHECKS = ("product_identity", "beta_profile", "ideal_coprimality", "invariants", "reduction_shape")


def check_pair(r, x, y, checks=PAIR_CHECKS):
    ctx = build_context(r)
    profile = build_factors(ctx, x, y)
    out = {}
    if "product_identity" in checks:
        out["product_identity"] = profile.product_identity()
    if "beta_profile" in checks:
        out["beta_profile"] = beta_profile_holds(profile)
    if "ideal_coprimality" in checks:
        out["ideal_coprimality"] = verify_pairwise_coprimality(profile).ok
    if "invariants" in checks or "reduction_shape" in checks:
        curve = frey_type1(profile)
        if "invariants" in checks:
            out["invariants"] = invariants_hold(curve)
        if "reduction_shape" in checks:
            out["reduction_shape"] = reduction_shape_holds(curve)
    return out


def check_field(r, split_below=50):
    """Per-field properties: alpha differences, ramification at r, splitting."""
    ctx = build_context(r)
    d = ctx.degree
    alpha_differences = all(
        beta_valuation(alpha_element(ctx, k) - alpha_element(ctx, j)) == 1
        for j in range(d + 1)
        for k in range(j)
    )
    above_r = factor_rational_prime(ctx, r)
    ramification = (
        len(above_r) == 1
        and above_r[0][0].e == d
        and above_r[0][0].f == 1
        and reconstruct(ctx, [(above_r[0][0], d)]) == rational_ideal(ctx, r)
    )
    splitting = True
    q = 2
    while q < split_below:
        if is_prime(q):
            fs = factor_rational_prime(ctx, q)
            splitting &= sum(P.e * P.f for P, _ in fs) == d
            splitting &= reconstruct(ctx, list(fs)) == rational_ideal(ctx, q)
        q += 1
    return {"alpha_differences": alpha_differences, "ramification_at_r": ramification, "splitting": splitting}


def _sweep_chunk(args):
    r, pairs, checks = args
    return [(r, x, y, check_pair(r, x, y, checks)) for x, y in pairs]


def cmd_sweep(r_list, bound, checks=PAIR_CHECKS, workers=1):
    """Run the per-field and per-pair property checks."""
    _check_bound(bound)
    fields = []
    jobs = []
    for r in r_list:
        build_context(r)
        fields.append(dict(check_field(r), r=r))
        pairs = list(coprime_pairs(bound))
        step = max(1, len(pairs) // max(1, 4 * workers))
        for i in range(0, len(pairs), step):
            jobs.append((r, pairs[i:i + step], tuple(checks)))
    if workers > 1 and jobs:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_sweep_chunk, jobs))
    else:
        chunks = [_sweep_chunk(job) for job in jobs]
    cases = [
        {"r": r, "x": _s(x), "y": _s(y), "properties": props}
        for chunk in chunks
        for r, x, y, props in chunk
    ]
    failures = sum(1 for c in cases for ok in c["properties"].values() if not ok)
    failures += sum(1 for f in fields for key, ok in f.items() if key != "r" and not ok)
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "sweep",
        "input": {"r_list": list(r_list), "bound": bound},
        "fields": fields,
        "cases": cases,
        "failures": failures,
        "ok": failures == 0,
    }
