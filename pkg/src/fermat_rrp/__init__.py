"""Exact arithmetic for the modular method on x^r + y^r = D z^p.

Real cyclotomic ring arithmetic, ideals in Hermite normal form, the
factorization of x^r + y^r over O_K, and the two Frey curve constructions
with their invariants, reduction types and level data.
"""

from .errors import (
    DecompositionError,
    DegenerateCurveError,
    DeskScaleError,
    InvalidInputError,
    InvariantViolation,
    NoValidContextError,
)
from .factorization import (
    FactorDecomposition,
    FactorProfile,
    SolutionContext,
    build_factors,
    decompose_factors,
    valuation_balance_check,
    verify_pairwise_coprimality,
)
from .frey import (
    CurveKind,
    FreyCurve,
    LevelData,
    ReductionKind,
    curve_invariants,
    eichler_shimura_condition,
    frey_type1,
    frey_type2,
    inertia_criterion,
    j_beta_valuation,
    j_lambda_check,
    level_data,
    reduction_type,
)
from .ideals import (
    IdealHNF,
    PrimeIdeal,
    factor_rational_prime,
    ideal_product,
    ideal_sum,
    principal_ideal,
    valuation_at,
)
from .ring import (
    RingContext,
    RingElement,
    alpha_element,
    beta_valuation,
    build_context,
    galois_apply,
    norm,
)

__version__ = "0.1.0"
