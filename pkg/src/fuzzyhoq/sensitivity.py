"""Monte-Carlo robustness of the TR ranking under judgment noise.

Each trial perturbs the questionnaire along its own discrete scales:
pairwise judgments step one notch on the nine-point ratio ladder,
HOQ cells move one grade on the blank/W/M/S ladder (roof: blank/-/+),
and the whole pipeline is recomputed.  Moves past a ladder end are
absorbed (the value stays).  Trial t draws from substream (seed, t),
so reports are identical regardless of execution order.

Trials whose pipeline fails (for example power-iteration breakdown on a
mangled matrix) are discarded and counted, never silently dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import pipeline
from .ahp import SAATY_LADDER
from .errors import FuzzyHoqError, ValidationError
from .fuzzy import CorrelationDegree, RelationshipDegree
from .project import HoqProject

__all__ = ["PerturbationSpec", "StabilityReport", "run_sensitivity"]

_REL_LADDER = RelationshipDegree.ladder()
_CORR_LADDER = CorrelationDegree.ladder()


@dataclass(frozen=True)
class PerturbationSpec:
    """What to shake, how hard, and the seed that makes it reproducible."""

    trials: int
    seed: int
    judgment_step_prob: float = 0.0
    cell_flip_prob: float = 0.0
    perturb_roof: bool = False

    def __post_init__(self):
        problems = []
        if self.trials < 1:
            problems.append(f"trials must be >= 1, got {self.trials}")
        for name in ("judgment_step_prob", "cell_flip_prob"):
            p = getattr(self, name)
            if not (0.0 <= p <= 1.0):
                problems.append(f"{name} must be in [0, 1], got {p}")
        if problems:
            raise ValidationError(problems)


@dataclass(frozen=True)
class StabilityReport:
    """Rank distributions across trials, in TR catalog order.

    histogram[j][r] counts trials where TR j landed at rank r+1 and sums
    to ``completed`` for every TR.  reversal_rate[j][k] is the fraction
    of completed trials where TRs j and k ended up in the opposite order
    from the baseline.
    """

    tr_codes: tuple[str, ...]
    baseline_ranks: tuple[int, ...]
    trials: int
    completed: int
    discarded: int
    discard_codes: dict[str, int]
    histogram: tuple[tuple[int, ...], ...]
    top1_frequency: tuple[float, ...]
    reversal_rate: tuple[tuple[float, ...], ...]

    def to_dict(self) -> dict:
        return {
            "tr_codes": list(self.tr_codes),
            "baseline_ranks": list(self.baseline_ranks),
            "trials": self.trials,
            "completed": self.completed,
            "discarded": self.discarded,
            "discard_codes": dict(self.discard_codes),
            "histogram": [list(row) for row in self.histogram],
            "top1_frequency": list(self.top1_frequency),
            "reversal_rate": [list(row) for row in self.reversal_rate],
        }


def _step_ladder_value(value: float, rng: np.random.Generator) -> float:
    """Move one notch on the ratio ladder, snapping off-scale values first."""
    logs = [abs(math.log(value) - math.log(v)) for v in SAATY_LADDER]
    idx = logs.index(min(logs))
    idx = min(max(idx + (1 if rng.random() < 0.5 else -1), 0), len(SAATY_LADDER) - 1)
    return SAATY_LADDER[idx]


def _step_grade(token: str, ladder, rng: np.random.Generator) -> str:
    degree = ladder[0].__class__.from_token(token)
    idx = ladder.index(degree)
    idx = min(max(idx + (1 if rng.random() < 0.5 else -1), 0), len(ladder) - 1)
    return ladder[idx].token


def _perturb(project: HoqProject, spec: PerturbationSpec, rng: np.random.Generator) -> HoqProject:
    """One trial's perturbed copy; iteration order is fixed by the document."""
    p = project.clone()
    if spec.judgment_step_prob > 0:
        for slot in p.matrix_slots():
            table = p.judgment_table(slot)
            for respondent in p.respondents:
                matrix = table[respondent]
                n = matrix.shape[0]
                for i in range(n):
                    for j in range(i + 1, n):
                        if rng.random() < spec.judgment_step_prob:
                            stepped = _step_ladder_value(matrix[i, j], rng)
                            matrix[i, j] = stepped
                            matrix[j, i] = 1.0 / stepped
    if spec.cell_flip_prob > 0:
        for i in range(len(p.crs)):
            for j in range(len(p.trs)):
                if rng.random() < spec.cell_flip_prob:
                    p.relationships[i][j] = _step_grade(p.relationships[i][j], _REL_LADDER, rng)
        if spec.perturb_roof:
            for k in range(len(p.trs)):
                for j in range(k + 1, len(p.trs)):
                    if rng.random() < spec.cell_flip_prob:
                        p.set_roof(k, j, _step_grade(p.roof_token(k, j), _CORR_LADDER, rng))
    return p


def _ranks(project: HoqProject, method: str) -> tuple[int, ...]:
    report = pipeline.compute_rank(project, method=method, allow_inconsistent=True)
    return tuple(row.rank for row in report.rows)


def run_sensitivity(
    project: HoqProject,
    spec: PerturbationSpec,
    method: str = "eigenvector",
) -> StabilityReport:
    """Perturb, recompute, and aggregate rank stability over all trials."""
    project.require_valid()
    baseline = _ranks(project, method)
    m = len(project.trs)
    histogram = np.zeros((m, m), dtype=int)
    reversals = np.zeros((m, m), dtype=int)
    discard_codes: dict[str, int] = {}
    completed = 0
    for trial in range(spec.trials):
        rng = np.random.default_rng([spec.seed & 0xFFFFFFFFFFFFFFFF, trial])
        try:
            ranks = _ranks(_perturb(project, spec, rng), method)
        except FuzzyHoqError as e:
            discard_codes[e.code] = discard_codes.get(e.code, 0) + 1
            continue
        completed += 1
        for j in range(m):
            histogram[j, ranks[j] - 1] += 1
            for k in range(j + 1, m):
                if (ranks[j] - ranks[k]) * (baseline[j] - baseline[k]) < 0:
                    reversals[j, k] += 1
                    reversals[k, j] += 1
    denominator = max(completed, 1)
    return StabilityReport(
        tr_codes=tuple(code for code, _ in project.trs),
        baseline_ranks=baseline,
        trials=spec.trials,
        completed=completed,
        discarded=spec.trials - completed,
        discard_codes=discard_codes,
        histogram=tuple(tuple(int(x) for x in row) for row in histogram),
        top1_frequency=tuple(float(histogram[j, 0]) / denominator for j in range(m)),
        reversal_rate=tuple(
            tuple(float(reversals[j, k]) / denominator for k in range(m)) for j in range(m)
        ),
    )
