"""Shared fixtures: small hand-built projects and random generators."""

from __future__ import annotations

import numpy as np
import pytest

from fuzzyhoq.project import HoqProject, ProjectConfig


def make_project(
    name: str = "fixture",
    crs: list[tuple[str, str]] | None = None,
    trs: list[tuple[str, str]] | None = None,
    criteria: list[tuple[str, str]] | None = None,
    respondents: list[str] | None = None,
    criteria_matrix=None,
    local_matrices: dict[str, np.ndarray] | None = None,
    relationships: list[list[str]] | None = None,
    roof: list[list[str]] | None = None,
) -> HoqProject:
    """Single-respondent project with identity defaults for anything omitted."""
    crs = crs or [("CR1", "first requirement")]
    trs = trs or [("TR1", "first measure")]
    criteria = criteria or [("C1", "only criterion")]
    respondents = respondents or ["r1"]
    n, m, c = len(crs), len(trs), len(criteria)
    if criteria_matrix is None:
        criteria_matrix = np.ones((c, c))
    if local_matrices is None:
        local_matrices = {code: np.ones((n, n)) for code, _ in criteria}
    if relationships is None:
        relationships = [["S"] * m for _ in range(n)]
    if roof is None:
        roof = [[""] * (m - 1 - k) for k in range(m - 1)]
    return HoqProject(
        name=name,
        crs=list(crs),
        trs=list(trs),
        criteria=list(criteria),
        respondents=list(respondents),
        criteria_judgments={r: np.array(criteria_matrix, dtype=float) for r in respondents},
        local_judgments={
            code: {r: np.array(matrix, dtype=float) for r in respondents}
            for code, matrix in local_matrices.items()
        },
        relationships=[list(row) for row in relationships],
        roof=[list(row) for row in roof],
        config=ProjectConfig(),
    )


@pytest.fixture
def one_by_one_project() -> HoqProject:
    """1 CR x 1 TR, single Strong cell, empty roof: the hand pipeline fixture."""
    return make_project()


@pytest.fixture
def toy_two_tr_project() -> HoqProject:
    """1 CR x 2 TRs (Weak, Medium) used by the sensitivity enumeration tests."""
    return make_project(
        trs=[("TR1", "first measure"), ("TR2", "second measure")],
        relationships=[["W", "M"]],
    )


def random_reciprocal_matrix(rng: np.random.Generator, n: int, spread: float = 1.0) -> np.ndarray:
    """Reciprocal matrix with log-uniform upper judgments in [9^-spread, 9^spread]."""
    m = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            v = 9.0 ** rng.uniform(-spread, spread)
            m[i, j] = v
            m[j, i] = 1.0 / v
    return m


def consistent_matrix(w: np.ndarray) -> np.ndarray:
    """Perfectly consistent matrix a_ij = w_i / w_j."""
    w = np.asarray(w, dtype=float)
    return np.outer(w, 1.0 / w)
