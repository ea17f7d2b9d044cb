"""Frey curves y^2 = x(x - A)(x + B) with A + B + C = 0 over O_K.

Two constructions are provided.  The first uses f_1, f_2, f_3 and exists
for every prime r > 5.  The second uses (x + y)^2, f_1, f_2 and is meant
for solutions with r | z, where it has potentially multiplicative
reduction at beta.
"""

import enum
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Tuple

from .errors import DegenerateCurveError, InvalidInputError, InvariantViolation
from .factorization import FactorProfile
from .ideals import (
    PrimeIdeal,
    element_valuation,
    factor_rational_prime,
    reconstruct,
    unit_ideal,
)
from .intmath import factor_integer, vq
from .ring import RingElement, alpha_element, beta_valuation, norm


class CurveKind(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"


class JInvariant(NamedTuple):
    numerator: RingElement
    denominator: RingElement


def weierstrass_invariants(a1, a2, a3, a4, a6):
    """(c4, c6, disc) of a general Weierstrass model, over any commutative ring."""
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6
    disc = -(b2 * b2 * b8) - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return c4, c6, disc


def curve_invariants(A, B):
    """c4, c6, disc and j of y^2 = x(x - A)(x + B), C = -A - B."""
    C = -A - B
    disc = 16 * (A * B * C) ** 2
    if disc.is_zero():
        raise DegenerateCurveError("ABC = 0: the curve is singular")
    c4 = 16 * (A * A + A * B + B * B)
    c6 = -32 * (A - B) * (B - C) * (C - A)
    return c4, c6, disc, JInvariant(c4 * c4 * c4, disc)


@dataclass(frozen=True)
class FreyCurve:
    kind: CurveKind
    A: RingElement
    B: RingElement
    C: RingElement
    c4: RingElement = field(repr=False)
    c6: RingElement = field(repr=False)
    disc: RingElement = field(repr=False)
    j: JInvariant = field(repr=False)
    profile: FactorProfile = field(repr=False, compare=False)

    @property
    def ctx(self):
        return self.A.ctx

    def weierstrass_coefficients(self):
        return (0, self.B - self.A, 0, -(self.A * self.B), 0)

    def beta_valuations(self):
        return {
            "A": beta_valuation(self.A),
            "B": beta_valuation(self.B),
            "C": beta_valuation(self.C),
            "c4": beta_valuation(self.c4),
            "disc": beta_valuation(self.disc),
        }


def _make_curve(kind, A, B, C, profile):
    if not (A + B + C).is_zero():
        raise InvariantViolation(f"A + B + C != 0 for the {kind.value} curve")
    c4, c6, disc, j = curve_invariants(A, B)
    return FreyCurve(kind, A, B, C, c4, c6, disc, j, profile)


def frey_type1(profile):
    ctx = profile.ctx
    if ctx.degree < 3:
        raise InvalidInputError("the first construction needs alpha_3")
    a1, a2, a3 = (alpha_element(ctx, j) for j in (1, 2, 3))
    f = profile.factors
    A = (a3 - a2) * f[1]
    B = (a1 - a3) * f[2]
    C = (a2 - a1) * f[3]
    return _make_curve(CurveKind.TYPE1, A, B, C, profile)


def type2_expected_valuations(r, p, k):
    return {"A": (p * k - 1) * (r - 1) + 1, "B": 2, "C": 2}


def frey_type2(profile, p, z):
    """Second construction; requires r | z and checks the beta-valuations of A, B, C."""
    ctx = profile.ctx
    r = ctx.r
    if z == 0 or z % r:
        raise InvalidInputError(f"the second construction needs r | z (r={r}, z={z})")
    a1, a2 = alpha_element(ctx, 1), alpha_element(ctx, 2)
    f = profile.factors
    A = (a1 - a2) * f[0]
    B = (a2 - 2) * f[1]
    C = (2 - a1) * f[2]
    curve = _make_curve(CurveKind.TYPE2, A, B, C, profile)
    k = vq(z, r)
    expected = type2_expected_valuations(r, p, k)
    observed = {name: beta_valuation(getattr(curve, name)) for name in "ABC"}
    if observed != expected:
        raise InvariantViolation(
            f"beta-valuations {observed} differ from {expected}; (x, y, p, z) "
            "is not consistent with r^(pk) exactly dividing x^r + y^r"
        )
    return curve


class ReductionKind(enum.Enum):
    GOOD = "good"
    MULTIPLICATIVE = "multiplicative"
    ADDITIVE = "additive"


@dataclass(frozen=True)
class Reduction:
    prime: PrimeIdeal
    kind: ReductionKind
    disc_valuation: int
    c4_valuation: Optional[int] = None

    def as_dict(self):
        out = self.prime.label()
        out.update(
            kind=self.kind.value,
            disc_valuation=self.disc_valuation,
            c4_valuation=self.c4_valuation,
        )
        return out


def reduction_type(curve, P):
    """Reduction at a prime not above 2 and different from beta.

    The model is taken as is; it is minimal at such primes whenever the
    reduction comes out good or multiplicative.
    """
    if P.q == 2 or P.q == curve.ctx.r:
        raise InvalidInputError("reduction type is only classified away from 2 and beta")
    vd = element_valuation(P, curve.disc)
    if vd == 0:
        return Reduction(P, ReductionKind.GOOD, 0)
    vc = element_valuation(P, curve.c4)
    kind = ReductionKind.MULTIPLICATIVE if vc == 0 else ReductionKind.ADDITIVE
    return Reduction(P, kind, vd, vc)


def bad_primes(curve):
    """Primes away from 2 and beta at which the discriminant has positive valuation."""
    ctx = curve.ctx
    qs = set()
    for a in (curve.A, curve.B, curve.C):
        qs.update(factor_integer(norm(a)))
    out = []
    for q in sorted(qs):
        if q in (2, ctx.r):
            continue
        for P, _ in factor_rational_prime(ctx, q):
            red = reduction_type(curve, P)
            if red.kind is not ReductionKind.GOOD:
                out.append(red)
    return out


@dataclass(frozen=True)
class LevelData:
    d_radical: object = field(repr=False)  # IdealHNF
    d_primes: Tuple[PrimeIdeal, ...]
    beta_exponent_range: Tuple[int, int]
    two_adic_ranges: Tuple[Tuple[PrimeIdeal, Tuple[int, int]], ...]
    mp_primes: Tuple[Reduction, ...]
    multiplicative_primes: Tuple[Reduction, ...]
    additive_primes: Tuple[Reduction, ...]
    divides_rad_D: bool


def level_data(curve, D, p):
    """Support of the conductor and of the lowered level away from 2 and beta.

    Exponents at beta and above 2 are only bounded, so they come back as
    ranges.  A multiplicative prime goes to the M_p part when p divides the
    discriminant valuation, and otherwise to the radical of the D-part.
    """
    ctx = curve.ctx
    bad = bad_primes(curve)
    mult = tuple(red for red in bad if red.kind is ReductionKind.MULTIPLICATIVE)
    additive = tuple(red for red in bad if red.kind is ReductionKind.ADDITIVE)
    mp = tuple(red for red in mult if red.disc_valuation % p == 0)
    d_primes = tuple(red.prime for red in mult if red.disc_valuation % p)
    d_radical = reconstruct(ctx, [(P, 1) for P in d_primes])
    two = tuple(
        (P, (0, 2 + 6 * e)) for P, e in factor_rational_prime(ctx, 2)
    )
    divides = d_radical.contains_ideal(radical_ideal(ctx, D))
    return LevelData(d_radical, d_primes, (0, 2), two, mp, mult, additive, divides)


def radical_ideal(ctx, n):
    """Product of all primes of O_K above the primes dividing n."""
    primes = []
    for q in factor_integer(n):
        for P, _ in factor_rational_prime(ctx, q):
            primes.append((P, 1))
    return reconstruct(ctx, primes) if primes else unit_ideal(ctx)


def j_beta_valuation_formula(r, p, k):
    if p < 5 or k < 1:
        raise InvalidInputError("the j-valuation formula needs p >= 5 and k >= 1")
    return 2 - 2 * (p * k - 1) * (r - 1)


def j_beta_valuation(curve, p, k):
    """v_beta(j) of the second curve, checked against 2 - 2(pk - 1)(r - 1)."""
    if curve.kind is not CurveKind.TYPE2:
        raise InvalidInputError("the beta j-valuation formula concerns the second curve")
    expected = j_beta_valuation_formula(curve.ctx.r, p, k)
    v = beta_valuation(curve.j.numerator) - beta_valuation(curve.j.denominator)
    if v != expected:
        raise InvariantViolation(f"v_beta(j) = {v}, expected {expected}")
    return v


def inertia_criterion(j_valuation, p):
    """p divides the order of the inertia image iff v(j) < 0 and p does not divide v(j)."""
    return j_valuation < 0 and j_valuation % p != 0


def eichler_shimura_condition(r, p):
    """p divides neither Norm(beta) - 1 nor Norm(beta) + 1, where Norm(beta) = r."""
    return (r - 1) % p != 0 and (r + 1) % p != 0


def j_lambda_check(curve):
    """Exact checks of the Legendre-form j-invariant with lambda = -A/B.

    ``lambda_form`` is j * l^2 (l - 1)^2 = 2^8 (l^2 - l + 1)^3 with
    denominators cleared.  The two ``*_holds`` entries test nearby variants
    (denominator l^2 (l + 1); ratio relation without its minus sign) and are
    expected to come out False.
    """
    A, B, C = curve.A, curve.B, curve.C
    if B.is_zero():
        raise DegenerateCurveError("B = 0")
    num, den = curve.j
    q = A * A + A * B + B * B
    out = {
        "invariant_form": num * (A * B * C) ** 2 == 256 * q ** 3 * den,
    }
    ln, ld = -A, B  # lambda = ln / ld
    quad = ln * ln - ln * ld + ld * ld
    out["lambda_form"] = num * ln * ln * (ln - ld) ** 2 * ld * ld == 256 * quad ** 3 * den
    # j * l^2 (l + 1) = 2^8 (l^2 - l + 1)^3, times ld^6
    out["lambda_plus_one_denominator_holds"] = (
        num * ln * ln * (ln + ld) * ld ** 3 == 256 * quad ** 3 * den
    )
    if curve.kind is CurveKind.TYPE1:
        ctx = curve.ctx
        f1, f2 = curve.profile.factors[1], curve.profile.factors[2]
        a1, a2, a3 = (alpha_element(ctx, j) for j in (1, 2, 3))
        # f1 / f2 = -lambda (a1 - a3) / (a3 - a2)
        out["ratio_relation"] = f1 * (a3 - a2) * ld == -(f2 * ln * (a1 - a3))
        out["unsigned_ratio_holds"] = f1 * (a3 - a2) * ld == f2 * ln * (a1 - a3)
    return out
