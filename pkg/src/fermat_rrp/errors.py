"""Exception types shared across the package."""


class InvalidInputError(ValueError):
    """Mathematically invalid input (non-prime r, non-coprime pair, ...)."""


class DeskScaleError(InvalidInputError):
    """Input exceeds the configured desk-scale limits."""


class DegenerateCurveError(InvalidInputError):
    """ABC = 0, so the Frey curve is singular."""


class InvariantViolation(AssertionError):
    """An identity that must hold exactly failed to hold."""


class NoValidContextError(InvalidInputError):
    """No (D, z) pair turns x^r + y^r into a valid solution context."""


class DecompositionError(ValueError):
    """A prime-ideal exponent outside D and beta is not divisible by p.

    This is the arithmetic obstruction that tells us the (x, y, D, p) data
    is not a solution context; it carries enough detail to report it.
    """

    def __init__(self, factor_index, q, gen_poly, exponent, p):
        self.factor_index = factor_index
        self.q = q
        self.gen_poly = tuple(gen_poly)
        self.exponent = exponent
        self.p = p
        super().__init__(
            f"factor {factor_index}: prime above {q} (gen {list(gen_poly)}) "
            f"has exponent {exponent}, not divisible by p={p}"
        )

    def as_dict(self):
        return {
            "factor_index": self.factor_index,
            "q": str(self.q),
            "gen_poly": [str(c) for c in self.gen_poly],
            "exponent": self.exponent,
            "p": self.p,
        }
