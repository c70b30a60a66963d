"""The fuzzy House of Quality: from CR weights to a ranked TR priority list.

Pipeline for m technical requirements (TRs) against n weighted customer
requirements (CRs):

    RI_j   = sum_i  W_i * tfn(relationship[i][j])        relative importance
    RI_j*  = RI_j + sum_{k != j} tfn(roof[k][j]) * RI_k  roof-adjusted priority
    NRI_j* = RI_j* / RI_max*                             fuzzy division by the
                                                         max-defuzzified column
    crisp  = defuzzify(NRI_j*)                           ranking key

Sums run left to right in index order, so results are bit-stable.  Ties
in the ranking and in the normalization divisor go to the lowest index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DegenerateDenominator, ValidationError
from .fuzzy import TFN, ZERO, CorrelationDegree, RelationshipDegree

__all__ = [
    "HoqModel",
    "TrPriority",
    "PriorityReport",
    "relative_importance",
    "roof_adjusted",
    "normalize",
    "rank",
]


@dataclass(frozen=True)
class HoqModel:
    """Immutable HOQ snapshot: catalogs, CR weights, relationship grid, roof.

    crs / trs are (code, label) pairs; relationships is an n x m grid and
    roof an m x m symmetric grid with an empty diagonal.
    """

    crs: tuple[tuple[str, str], ...]
    trs: tuple[tuple[str, str], ...]
    weights: tuple[float, ...]
    relationships: tuple[tuple[RelationshipDegree, ...], ...]
    roof: tuple[tuple[CorrelationDegree, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(float(w) for w in self.weights))
        problems = []
        n, m = len(self.crs), len(self.trs)
        if len(self.weights) != n:
            problems.append(f"{len(self.weights)} weights for {n} CRs")
        if any(not np.isfinite(w) or w < 0 for w in self.weights):
            problems.append("CR weights must be finite and nonnegative")
        if len(self.relationships) != n or any(len(row) != m for row in self.relationships):
            problems.append(f"relationship grid must be {n}x{m}")
        if len(self.roof) != m or any(len(row) != m for row in self.roof):
            problems.append(f"roof must be {m}x{m}")
        else:
            for j in range(m):
                if self.roof[j][j] is not CorrelationDegree.NONE:
                    problems.append(f"roof diagonal ({j},{j}) must be empty")
                for k in range(j + 1, m):
                    if self.roof[j][k] is not self.roof[k][j]:
                        problems.append(f"roof must be symmetric, differs at ({j},{k})")
        if problems:
            raise ValidationError(problems)

    @property
    def n_crs(self) -> int:
        return len(self.crs)

    @property
    def n_trs(self) -> int:
        return len(self.trs)


def relative_importance(model: HoqModel) -> list[TFN]:
    """Fuzzy relative importance of each TR: weighted sum of its column."""
    out = []
    for j in range(model.n_trs):
        acc = ZERO
        for i in range(model.n_crs):
            acc = acc + model.relationships[i][j].tfn.scale(model.weights[i])
        out.append(acc)
    return out


def roof_adjusted(model: HoqModel, ri: Sequence[TFN]) -> list[TFN]:
    """Add each TR's roof-correlated share of the other columns."""
    out = []
    for j in range(model.n_trs):
        acc = ri[j]
        for k in range(model.n_trs):
            if k == j:
                continue
            acc = acc + model.roof[k][j].tfn * ri[k]
        out.append(acc)
    return out


def normalize(ri_star: Sequence[TFN]) -> tuple[list[TFN], int, bool]:
    """Divide every RI_j* by the one with the largest crisp value.

    Returns (normalized columns, index of the divisor, degenerate flag).
    When the divisor's lower bound is 0 fuzzy division is undefined; the
    fallback divides componentwise by the divisor's upper bound c and the
    flag is set so reports can mark the result.
    """
    if not ri_star:
        raise DegenerateDenominator("cannot normalize an empty priority list")
    best = 0
    best_value = ri_star[0].defuzzify()
    for j in range(1, len(ri_star)):
        value = ri_star[j].defuzzify()
        if value > best_value:
            best, best_value = j, value
    divisor = ri_star[best]
    if divisor.a > 0:
        return [x / divisor for x in ri_star], best, False
    if divisor.c > 0:
        return [x.scale(1.0 / divisor.c) for x in ri_star], best, True
    raise DegenerateDenominator(
        "all priorities are zero; nothing to normalize against"
    )


@dataclass(frozen=True)
class TrPriority:
    """One TR's full trail through the pipeline plus its final rank."""

    code: str
    label: str
    ri: TFN
    ri_star: TFN
    nri_star: TFN
    crisp: float
    raw_crisp: float  # defuzzify(ri_star), pre-normalization diagnostic
    rank: int

    def to_dict(self) -> dict:
        return {
            "code": self.code,
            "label": self.label,
            "ri": self.ri.as_tuple(),
            "ri_star": self.ri_star.as_tuple(),
            "nri_star": self.nri_star.as_tuple(),
            "crisp": self.crisp,
            "raw_crisp": self.raw_crisp,
            "rank": self.rank,
        }


@dataclass(frozen=True)
class PriorityReport:
    """Per-TR priorities in catalog order; rank 1 is the largest crisp value."""

    rows: tuple[TrPriority, ...]
    degenerate_normalization: bool

    def ranked(self) -> list[TrPriority]:
        return sorted(self.rows, key=lambda r: r.rank)

    def plot_series(self) -> list[tuple[str, float]]:
        """(TR code, crisp value) pairs, descending by crisp."""
        return [(r.code, r.crisp) for r in self.ranked()]

    def to_dict(self) -> dict:
        return {
            "degenerate_normalization": self.degenerate_normalization,
            "rows": [r.to_dict() for r in self.rows],
        }


def rank(model: HoqModel) -> PriorityReport:
    """Run the full pipeline and rank TRs by descending crisp value.

    Equal crisp values keep catalog order (lowest TR index first).
    """
    ri = relative_importance(model)
    ri_star = roof_adjusted(model, ri)
    nri_star, _, degenerate = normalize(ri_star)
    crisp = [x.defuzzify() for x in nri_star]
    order = sorted(range(model.n_trs), key=lambda j: (-crisp[j], j))
    ranks = [0] * model.n_trs
    for position, j in enumerate(order, start=1):
        ranks[j] = position
    rows = tuple(
        TrPriority(
            code=model.trs[j][0],
            label=model.trs[j][1],
            ri=ri[j],
            ri_star=ri_star[j],
            nri_star=nri_star[j],
            crisp=crisp[j],
            raw_crisp=ri_star[j].defuzzify(),
            rank=ranks[j],
        )
        for j in range(model.n_trs)
    )
    return PriorityReport(rows=rows, degenerate_normalization=degenerate)
