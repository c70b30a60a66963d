"""Priority weights from pairwise comparison matrices.

Judgments live on the nine-point ratio scale (1 = equal ... 9 = extreme
dominance, reciprocals for reversed dominance).  Weights are the
normalized principal right eigenvector obtained by power iteration;
the geometric-mean-of-rows method is available as an explicitly selected
cross-check.  Consistency is measured as cr = ci / RI(n) with
ci = (lambda_max - n) / (n - 1) and the standard random-index table.

Group judgments are aggregated per element by geometric mean before
weight derivation, which preserves reciprocity.  Hierarchies are fixed
at two levels: a criteria matrix on top of one CR matrix per criterion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ConvergenceFailure,
    DuplicateJudgment,
    EmptyGroup,
    InconsistentInput,
    MissingJudgment,
    NonPositiveJudgment,
    ShapeMismatch,
    ValidationError,
)

__all__ = [
    "PairwiseMatrix",
    "ConsistencyReport",
    "Hierarchy",
    "SAATY_LADDER",
    "RANDOM_INDEX",
    "build_matrix",
    "matrix_from_entries",
    "matrix_problems",
    "derive_weights",
    "consistency",
    "aggregate_group",
    "synthesize",
]

# Discrete judgment ladder: 1/9 ... 1/2, 1, 2 ... 9.
SAATY_LADDER: tuple[float, ...] = tuple(1.0 / k for k in range(9, 1, -1)) + tuple(
    float(k) for k in range(1, 10)
)

# Saaty's random consistency indices by matrix order.  The classic table
# runs to n = 10; the 11..15 entries are the commonly cited extension.
# Orders beyond the table clamp to the last entry.
RANDOM_INDEX: dict[int, float] = {
    1: 0.0, 2: 0.0, 3: 0.58, 4: 0.90, 5: 1.12,
    6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49,
    11: 1.51, 12: 1.48, 13: 1.56, 14: 1.57, 15: 1.59,
}

RECIPROCITY_TOL = 1e-9
POWER_TOL = 1e-10
POWER_MAX_ITER = 10_000
CONSISTENCY_THRESHOLD = 0.10


def random_index(n: int) -> float:
    return RANDOM_INDEX.get(n, RANDOM_INDEX[max(RANDOM_INDEX)])


@dataclass(frozen=True)
class PairwiseMatrix:
    """Square reciprocal judgment matrix with ordered element labels."""

    element_ids: tuple[str, ...]
    entries: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.entries, dtype=float)
        object.__setattr__(self, "entries", m)
        problems = matrix_problems(m, len(self.element_ids))
        if problems:
            raise ValidationError(problems)
        m.flags.writeable = False

    @property
    def n(self) -> int:
        return len(self.element_ids)

    def judgment(self, i: int, j: int) -> float:
        return float(self.entries[i, j])

    def replace_judgment(self, i: int, j: int, value: float) -> "PairwiseMatrix":
        """New matrix with (i, j) set to value and (j, i) to its reciprocal."""
        if i == j:
            raise NonPositiveJudgment("diagonal judgments are fixed at 1")
        if value <= 0:
            raise NonPositiveJudgment(f"judgment must be positive, got {value}")
        m = np.array(self.entries)
        m[i, j] = value
        m[j, i] = 1.0 / value
        return PairwiseMatrix(self.element_ids, m)


def matrix_problems(m: np.ndarray, n_ids: int) -> list[str]:
    problems: list[str] = []
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        return [f"pairwise matrix must be square, got shape {m.shape}"]
    n = m.shape[0]
    if n != n_ids:
        problems.append(f"matrix order {n} does not match {n_ids} element ids")
    if not np.all(np.isfinite(m)):
        problems.append("matrix entries must be finite")
        return problems
    if np.any(m <= 0):
        problems.append("matrix entries must be strictly positive")
        return problems
    if np.any(np.abs(np.diag(m) - 1.0) > 1e-12):
        problems.append("diagonal entries must equal 1")
    for i in range(n):
        for j in range(i + 1, n):
            if abs(m[j, i] - 1.0 / m[i, j]) > RECIPROCITY_TOL:
                problems.append(
                    f"reciprocity violated at ({i},{j}): {m[i, j]} vs {m[j, i]}"
                )
    return problems


def build_matrix(
    n: int,
    upper_judgments: Iterable[tuple[int, int, float]],
    element_ids: Sequence[str] | None = None,
) -> PairwiseMatrix:
    """Assemble a reciprocal matrix from upper-triangle judgments.

    Each (i, j, value) with i < j fixes entry (i, j); the lower triangle
    is auto-filled with exact reciprocals and the diagonal with 1.
    """
    if element_ids is None:
        element_ids = tuple(f"E{k + 1}" for k in range(n))
    if len(element_ids) != n:
        raise ShapeMismatch(f"{len(element_ids)} element ids for order {n}")
    m = np.eye(n)
    seen: set[tuple[int, int]] = set()
    for i, j, value in upper_judgments:
        if not (0 <= i < j < n):
            raise ValueError(f"upper-triangle judgment needs 0 <= i < j < n, got ({i},{j})")
        if (i, j) in seen:
            raise DuplicateJudgment(f"judgment ({i},{j}) given more than once")
        if not (value > 0 and np.isfinite(value)):
            raise NonPositiveJudgment(f"judgment ({i},{j}) must be positive, got {value}")
        seen.add((i, j))
        m[i, j] = value
        m[j, i] = 1.0 / value
    missing = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in seen]
    if missing:
        raise MissingJudgment(f"missing judgments for pairs {missing}")
    return PairwiseMatrix(tuple(element_ids), m)


def matrix_from_entries(entries, element_ids: Sequence[str] | None = None) -> PairwiseMatrix:
    """Wrap a full matrix, validating reciprocity instead of auto-filling."""
    m = np.asarray(entries, dtype=float)
    if element_ids is None:
        element_ids = tuple(f"E{k + 1}" for k in range(m.shape[0]))
    return PairwiseMatrix(tuple(element_ids), m)


def _power_iteration(m: np.ndarray, tol: float, max_iter: int) -> tuple[np.ndarray, float]:
    """Dominant eigenpair of a positive matrix, deterministic uniform start."""
    n = m.shape[0]
    v = np.full(n, 1.0 / n)
    for _ in range(max_iter):
        w = m @ v
        w /= w.sum()
        if np.max(np.abs(w - v)) < tol:
            v = w
            break
        v = w
    else:
        raise ConvergenceFailure(
            f"power iteration did not converge within {max_iter} iterations"
        )
    lambda_max = float(v @ (m @ v) / (v @ v))
    return v, lambda_max


def derive_weights(
    matrix: PairwiseMatrix,
    method: str = "eigenvector",
    tol: float = POWER_TOL,
    max_iter: int = POWER_MAX_ITER,
) -> np.ndarray:
    """Priority weights, normalized to sum 1.

    method "eigenvector" (default) is the principal right eigenvector via
    power iteration; "rowgeomean" is the geometric mean of rows.  The two
    agree exactly on consistent matrices.
    """
    m = matrix.entries
    if method == "eigenvector":
        if matrix.n == 1:
            return np.array([1.0])
        v, _ = _power_iteration(m, tol, max_iter)
        return v
    if method == "rowgeomean":
        g = np.exp(np.mean(np.log(m), axis=1))
        return g / g.sum()
    raise ValueError(f"unknown weight derivation method {method!r}")


@dataclass(frozen=True)
class ConsistencyReport:
    """Dominant eigenvalue and the derived consistency figures."""

    lambda_max: float
    ci: float
    cr: float
    acceptable: bool


def consistency(
    matrix: PairwiseMatrix,
    threshold: float = CONSISTENCY_THRESHOLD,
    tol: float = POWER_TOL,
    max_iter: int = POWER_MAX_ITER,
) -> ConsistencyReport:
    """Consistency ratio from the converged power iteration."""
    n = matrix.n
    if n == 1:
        lambda_max = 1.0
    else:
        _, lambda_max = _power_iteration(matrix.entries, tol, max_iter)
    # reciprocal matrices have lambda_max >= n; clip tiny negative noise
    ci = 0.0 if n <= 2 else max(lambda_max - n, 0.0) / (n - 1)
    ri = random_index(n)
    cr = 0.0 if ri == 0.0 else ci / ri
    return ConsistencyReport(lambda_max=lambda_max, ci=ci, cr=cr, acceptable=cr <= threshold)


def aggregate_group(matrices: Sequence[PairwiseMatrix]) -> PairwiseMatrix:
    """Element-wise geometric mean of individual judgment matrices.

    Aggregation happens judgment by judgment (upper triangle), so the
    result is reciprocal by construction.
    """
    if len(matrices) == 0:
        raise EmptyGroup("cannot aggregate an empty group of matrices")
    first = matrices[0]
    for k, m in enumerate(matrices[1:], start=1):
        if m.element_ids != first.element_ids:
            raise ShapeMismatch(
                f"matrix {k} compares {m.element_ids}, expected {first.element_ids}"
            )
    if len(matrices) == 1:
        return first
    n = first.n
    stack = np.stack([m.entries for m in matrices])
    geo = np.exp(np.mean(np.log(stack), axis=0))
    out = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = geo[i, j]
            out[j, i] = 1.0 / geo[i, j]
    return PairwiseMatrix(first.element_ids, out)


@dataclass(frozen=True)
class Hierarchy:
    """Two-level hierarchy: criteria on top, one CR matrix per criterion."""

    criteria_matrix: PairwiseMatrix
    local_matrices: dict[str, PairwiseMatrix]

    def __post_init__(self):
        missing = [c for c in self.criteria_matrix.element_ids if c not in self.local_matrices]
        if missing:
            raise ShapeMismatch(f"no local matrix for criteria {missing}")
        locals_ = [self.local_matrices[c] for c in self.criteria_matrix.element_ids]
        ids = locals_[0].element_ids
        for c, m in zip(self.criteria_matrix.element_ids, locals_):
            if m.element_ids != ids:
                raise ShapeMismatch(
                    f"local matrix for {c!r} compares {m.element_ids}, expected {ids}"
                )

    @property
    def element_ids(self) -> tuple[str, ...]:
        return self.local_matrices[self.criteria_matrix.element_ids[0]].element_ids


def synthesize(
    hierarchy: Hierarchy,
    method: str = "eigenvector",
    threshold: float = CONSISTENCY_THRESHOLD,
    allow_inconsistent: bool = False,
    tol: float = POWER_TOL,
    max_iter: int = POWER_MAX_ITER,
) -> np.ndarray:
    """Global CR weights: criterion weight times local weight, summed.

    Distributive synthesis; the result sums to 1.  Every matrix must pass
    cr <= threshold unless allow_inconsistent is set.
    """
    order = hierarchy.criteria_matrix.element_ids
    if not allow_inconsistent:
        for name, m in [("criteria", hierarchy.criteria_matrix)] + [
            (c, hierarchy.local_matrices[c]) for c in order
        ]:
            report = consistency(m, threshold, tol, max_iter)
            if not report.acceptable:
                raise InconsistentInput(
                    f"matrix {name!r} has cr={report.cr:.3f} > {threshold}", locus=name
                )
    criterion_weights = derive_weights(hierarchy.criteria_matrix, method, tol, max_iter)
    total = np.zeros(len(hierarchy.element_ids))
    for weight, criterion in zip(criterion_weights, order):
        total += weight * derive_weights(hierarchy.local_matrices[criterion], method, tol, max_iter)
    return total / total.sum()
