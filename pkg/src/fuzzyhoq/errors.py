"""Error taxonomy shared by the engine, the CLI, and the HTTP service.

Every error carries a stable machine-readable ``code`` so API clients and
exit-code mapping never have to match on message text.
"""

from __future__ import annotations


class FuzzyHoqError(Exception):
    """Base class for all engine errors."""

    code = "engine-error"

    def __init__(self, message: str, locus: str | None = None):
        super().__init__(message)
        self.locus = locus


# -- fuzzy number construction and algebra ----------------------------------

class OrderingViolation(FuzzyHoqError):
    code = "tfn-ordering-violation"


class NegativeOperand(FuzzyHoqError):
    code = "tfn-negative-operand"


class DivisorNotPositive(FuzzyHoqError):
    code = "tfn-divisor-not-positive"


class NegativeScalar(FuzzyHoqError):
    code = "tfn-negative-scalar"


# -- pairwise judgments and weight derivation --------------------------------

class MissingJudgment(FuzzyHoqError):
    code = "missing-judgment"


class DuplicateJudgment(FuzzyHoqError):
    code = "duplicate-judgment"


class NonPositiveJudgment(FuzzyHoqError):
    code = "non-positive-judgment"


class ConvergenceFailure(FuzzyHoqError):
    code = "convergence-failure"


class ShapeMismatch(FuzzyHoqError):
    code = "shape-mismatch"


class EmptyGroup(FuzzyHoqError):
    code = "empty-group"


class InconsistentInput(FuzzyHoqError):
    code = "inconsistent-input"


# -- house of quality ---------------------------------------------------------

class DegenerateDenominator(FuzzyHoqError):
    code = "degenerate-denominator"


# -- project files and linguistic tables --------------------------------------

class ParseError(FuzzyHoqError):
    code = "parse-error"


class SchemaVersionUnsupported(FuzzyHoqError):
    code = "schema-version-unsupported"


class ValidationError(FuzzyHoqError):
    """Carries every violation found, not just the first one."""

    code = "validation-error"

    def __init__(self, problems: list[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class UnknownLinguisticToken(FuzzyHoqError):
    code = "unknown-linguistic-token"
