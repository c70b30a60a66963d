"""Wiring from a project document to weights, models, and rankings.

The project stores raw questionnaire material (per-respondent matrices,
token grids); this module aggregates respondents, synthesizes the
two-level hierarchy into global CR weights, assembles the HOQ model,
and runs the ranking.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ahp, hoq
from .errors import ValidationError
from .fuzzy import CorrelationDegree, RelationshipDegree
from .project import HoqProject

__all__ = ["MatrixResult", "AhpResult", "group_hierarchy", "compute_ahp", "build_model", "compute_rank"]


@dataclass(frozen=True)
class MatrixResult:
    """Weights and consistency for one matrix slot."""

    slot: str
    element_ids: tuple[str, ...]
    weights: tuple[float, ...]
    consistency: ahp.ConsistencyReport


@dataclass(frozen=True)
class AhpResult:
    """Per-slot results plus the synthesized global CR weights."""

    matrices: tuple[MatrixResult, ...]
    cr_codes: tuple[str, ...]
    global_weights: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "matrices": [
                {
                    "slot": m.slot,
                    "element_ids": list(m.element_ids),
                    "weights": list(m.weights),
                    "lambda_max": m.consistency.lambda_max,
                    "ci": m.consistency.ci,
                    "cr": m.consistency.cr,
                    "acceptable": m.consistency.acceptable,
                }
                for m in self.matrices
            ],
            "cr_codes": list(self.cr_codes),
            "global_weights": list(self.global_weights),
        }


def _slot_matrices(project: HoqProject, respondent: str | None) -> dict[str, ahp.PairwiseMatrix]:
    """One matrix per slot: a single respondent's, or the group aggregate."""
    if respondent is not None and respondent not in project.respondents:
        raise ValidationError([f"unknown respondent {respondent!r}"])
    criteria_ids = tuple(code for code, _ in project.criteria)
    cr_ids = tuple(code for code, _ in project.crs)
    out: dict[str, ahp.PairwiseMatrix] = {}
    for slot in project.matrix_slots():
        ids = criteria_ids if slot == "criteria" else cr_ids
        table = project.judgment_table(slot)
        if respondent is None:
            matrices = [
                ahp.matrix_from_entries(table[r], ids) for r in project.respondents
            ]
            out[slot] = ahp.aggregate_group(matrices)
        else:
            out[slot] = ahp.matrix_from_entries(table[respondent], ids)
    return out


def group_hierarchy(project: HoqProject, respondent: str | None = None) -> ahp.Hierarchy:
    """Two-level hierarchy from the group aggregate (or one respondent)."""
    matrices = _slot_matrices(project, respondent)
    return ahp.Hierarchy(
        criteria_matrix=matrices["criteria"],
        local_matrices={slot: m for slot, m in matrices.items() if slot != "criteria"},
    )


def compute_ahp(
    project: HoqProject,
    respondent: str | None = None,
    method: str = "eigenvector",
    allow_inconsistent: bool = False,
) -> AhpResult:
    """Weights + consistency per matrix slot, plus synthesized CR weights."""
    cfg = project.config
    matrices = _slot_matrices(project, respondent)
    results = []
    for slot in project.matrix_slots():
        matrix = matrices[slot]
        weights = ahp.derive_weights(matrix, method, cfg.power_tolerance, cfg.max_iterations)
        report = ahp.consistency(
            matrix, cfg.consistency_threshold, cfg.power_tolerance, cfg.max_iterations
        )
        results.append(
            MatrixResult(
                slot=slot,
                element_ids=matrix.element_ids,
                weights=tuple(float(w) for w in weights),
                consistency=report,
            )
        )
    hierarchy = ahp.Hierarchy(
        criteria_matrix=matrices["criteria"],
        local_matrices={s: m for s, m in matrices.items() if s != "criteria"},
    )
    global_weights = ahp.synthesize(
        hierarchy,
        method=method,
        threshold=cfg.consistency_threshold,
        allow_inconsistent=allow_inconsistent,
        tol=cfg.power_tolerance,
        max_iter=cfg.max_iterations,
    )
    return AhpResult(
        matrices=tuple(results),
        cr_codes=tuple(code for code, _ in project.crs),
        global_weights=tuple(float(w) for w in global_weights),
    )


def build_model(project: HoqProject, weights: np.ndarray | tuple[float, ...]) -> hoq.HoqModel:
    """HOQ model from the project's token grids and the given CR weights."""
    m = len(project.trs)
    relationships = tuple(
        tuple(RelationshipDegree.from_token(token) for token in row)
        for row in project.relationships
    )
    roof_grid = [[CorrelationDegree.NONE] * m for _ in range(m)]
    for k in range(m):
        for j in range(k + 1, m):
            degree = CorrelationDegree.from_token(project.roof_token(k, j))
            roof_grid[k][j] = degree
            roof_grid[j][k] = degree
    return hoq.HoqModel(
        crs=tuple(project.crs),
        trs=tuple(project.trs),
        weights=tuple(float(w) for w in weights),
        relationships=relationships,
        roof=tuple(tuple(row) for row in roof_grid),
    )


def compute_rank(
    project: HoqProject,
    respondent: str | None = None,
    method: str = "eigenvector",
    allow_inconsistent: bool = False,
) -> hoq.PriorityReport:
    """Full pipeline: synthesized weights into the fuzzy HOQ ranking."""
    result = compute_ahp(project, respondent, method, allow_inconsistent)
    model = build_model(project, result.global_weights)
    return hoq.rank(model)
