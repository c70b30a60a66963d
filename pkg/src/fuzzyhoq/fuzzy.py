"""Triangular fuzzy numbers and the linguistic scales of the fuzzy HOQ.

A triangular fuzzy number (TFN) is the triplet (a, b, c) of smallest,
most promising, and largest possible value.  The four algebra operations
are the componentwise forms used throughout the pipeline:

    add:    (a1+a2, b1+b2, c1+c2)
    mul:    (a1*a2, b1*b2, c1*c2)      nonnegative operands only
    div:    (a1/c2, b1/b2, c1/a2)      divisor support strictly positive
    scale:  (r*a,  r*b,  r*c)          r >= 0

Crisp values come from the weighted-mean defuzzification (a + 4b + c) / 6.
All values are immutable; every operation is a pure function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DivisorNotPositive,
    NegativeOperand,
    NegativeScalar,
    OrderingViolation,
    UnknownLinguisticToken,
)

__all__ = [
    "TFN",
    "ZERO",
    "RelationshipDegree",
    "CorrelationDegree",
]


@dataclass(frozen=True)
class TFN:
    """Triangular fuzzy number (a, b, c) with a <= b <= c."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if not math.isfinite(v):
                raise OrderingViolation(f"TFN components must be finite, got {(self.a, self.b, self.c)}")
        if self.a > self.b or self.b > self.c:
            raise OrderingViolation(f"TFN requires a <= b <= c, got {(self.a, self.b, self.c)}")

    # -- membership -----------------------------------------------------------

    def membership(self, x: float) -> float:
        """Piecewise-linear membership of x in this fuzzy number.

        Degenerate ramps (a == b or b == c) are treated as steps: the
        value at x == b is 1 even when a ramp has zero width.
        """
        if x < self.a or x > self.c:
            return 0.0
        if x == self.b:
            return 1.0
        if x < self.b:
            return (x - self.a) / (self.b - self.a)
        return (self.c - x) / (self.c - self.b)

    # -- algebra ---------------------------------------------------------------

    def __add__(self, other: "TFN") -> "TFN":
        if not isinstance(other, TFN):
            return NotImplemented
        return TFN(self.a + other.a, self.b + other.b, self.c + other.c)

    def __mul__(self, other: "TFN") -> "TFN":
        if not isinstance(other, TFN):
            return NotImplemented
        if self.a < 0 or other.a < 0:
            raise NegativeOperand(
                f"fuzzy product needs nonnegative operands, got {self.as_tuple()} * {other.as_tuple()}"
            )
        return TFN(self.a * other.a, self.b * other.b, self.c * other.c)

    def __truediv__(self, other: "TFN") -> "TFN":
        if not isinstance(other, TFN):
            return NotImplemented
        if other.a <= 0:
            raise DivisorNotPositive(
                f"fuzzy divisor must have strictly positive support, got {other.as_tuple()}"
            )
        if self.a < 0:
            raise NegativeOperand(f"fuzzy quotient needs a nonnegative numerator, got {self.as_tuple()}")
        return TFN(self.a / other.c, self.b / other.b, self.c / other.a)

    def scale(self, r: float) -> "TFN":
        """Multiply by a crisp nonnegative number r, componentwise."""
        if r < 0:
            raise NegativeScalar(f"scale factor must be >= 0, got {r}")
        return TFN(r * self.a, r * self.b, r * self.c)

    def __rmul__(self, r):
        if isinstance(r, (int, float)):
            return self.scale(r)
        return NotImplemented

    # -- crisp views ------------------------------------------------------------

    def defuzzify(self) -> float:
        """Crisp value (a + 4b + c) / 6."""
        return (self.a + 4.0 * self.b + self.c) / 6.0

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)


ZERO = TFN(0.0, 0.0, 0.0)


class _LinguisticDegree(Enum):
    """Shared parsing/formatting for the closed linguistic vocabularies.

    Enum order doubles as the perturbation ladder: members are declared
    weakest to strongest.
    """

    @property
    def tfn(self) -> TFN:
        return self._tfn_table()[self]

    @property
    def token(self) -> str:
        return self.value

    @classmethod
    def from_token(cls, token: str, locus: str | None = None):
        key = cls._aliases().get(token.strip().upper())
        if key is None:
            raise UnknownLinguisticToken(
                f"unknown {cls.__name__} token {token!r}"
                + (f" at {locus}" if locus else ""),
                locus=locus,
            )
        return key

    @classmethod
    def ladder(cls) -> tuple["_LinguisticDegree", ...]:
        return tuple(cls)


class RelationshipDegree(_LinguisticDegree):
    """CR-TR relationship strength of an HOQ cell; NONE is an empty cell."""

    NONE = ""
    WEAK = "W"
    MEDIUM = "M"
    STRONG = "S"

    @classmethod
    def _tfn_table(cls):
        return {
            cls.NONE: ZERO,
            cls.WEAK: TFN(0.0, 0.0, 0.3),
            cls.MEDIUM: TFN(0.3, 0.5, 0.7),
            cls.STRONG: TFN(0.7, 1.0, 1.0),
        }

    @classmethod
    def _aliases(cls):
        return {"": cls.NONE, "W": cls.WEAK, "M": cls.MEDIUM, "S": cls.STRONG}


class CorrelationDegree(_LinguisticDegree):
    """TR-TR roof correlation; NONE is an empty roof cell.

    The published scale maps NEGATIVE to the nonnegative TFN (0, 0.3, 0.5),
    so a negative correlation still adds to a priority.  Implemented as
    printed; surprising but intentional in the source scale.
    """

    NONE = ""
    NEGATIVE = "-"
    POSITIVE = "+"

    @classmethod
    def _tfn_table(cls):
        return {
            cls.NONE: ZERO,
            cls.NEGATIVE: TFN(0.0, 0.3, 0.5),
            cls.POSITIVE: TFN(0.5, 0.7, 1.0),
        }

    @classmethod
    def _aliases(cls):
        # accept the questionnaire glyphs (star = positive, triangle = negative)
        # and the unicode minus sign alongside the canonical ASCII tokens
        return {
            "": cls.NONE,
            "-": cls.NEGATIVE,
            "−": cls.NEGATIVE,
            "▲": cls.NEGATIVE,
            "+": cls.POSITIVE,
            "★": cls.POSITIVE,
        }
