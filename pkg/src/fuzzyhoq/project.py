"""Portable project files: catalogs, judgments, HOQ grids, config.

One canonical JSON document per project, ``schema_version`` mandatory.
Pairwise matrices are stored as full row-major float grids (the lower
triangle is canonicalized to exact reciprocals on save); linguistic
grids are stored as token lists ("S"/"M"/"W"/"" for relationships,
"+"/"-"/"" for the roof, which keeps only its upper triangle).

Loading is strict: unknown fields are rejected, and validation collects
every violation before failing so a questionnaire can be fixed in one
pass.  Saves are atomic (write to a temp file, then rename).
"""

from __future__ import annotations

import copy
import json
import os
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import ahp
from .errors import (
    NonPositiveJudgment,
    ParseError,
    SchemaVersionUnsupported,
    UnknownLinguisticToken,
    ValidationError,
)
from .fuzzy import CorrelationDegree, RelationshipDegree

__all__ = [
    "SCHEMA_VERSION",
    "ProjectConfig",
    "HoqProject",
    "load",
    "save",
    "from_document",
    "to_document",
    "import_matrix_csv",
]

SCHEMA_VERSION = 1

_TOP_LEVEL_FIELDS = (
    "schema_version",
    "name",
    "crs",
    "trs",
    "criteria",
    "respondents",
    "judgments",
    "relationships",
    "roof",
    "config",
)


@dataclass
class ProjectConfig:
    consistency_threshold: float = 0.10
    power_tolerance: float = 1e-10
    max_iterations: int = 10_000
    tie_break: str = "lowest-index"

    def problems(self) -> list[str]:
        out = []
        if not (0 < self.consistency_threshold):
            out.append("config.consistency_threshold must be positive")
        if not (0 < self.power_tolerance < 1):
            out.append("config.power_tolerance must be in (0, 1)")
        if self.max_iterations < 1:
            out.append("config.max_iterations must be >= 1")
        if self.tie_break != "lowest-index":
            out.append(f"config.tie_break {self.tie_break!r} is not supported")
        return out


@dataclass
class HoqProject:
    """Mutable project document: the unit of persistence and editing.

    judgments are full reciprocal matrices keyed by respondent; the
    ``local`` dict nests them per criterion.  ``relationships`` is an
    n x m token grid, ``roof`` the upper-triangle token rows (row k
    holds the pairs (k, k+1) ... (k, m-1)).
    """

    name: str
    crs: list[tuple[str, str]]
    trs: list[tuple[str, str]]
    criteria: list[tuple[str, str]]
    respondents: list[str]
    criteria_judgments: dict[str, np.ndarray]
    local_judgments: dict[str, dict[str, np.ndarray]]
    relationships: list[list[str]]
    roof: list[list[str]]
    config: ProjectConfig = field(default_factory=ProjectConfig)
    schema_version: int = SCHEMA_VERSION

    # -- validation -------------------------------------------------------------

    def problems(self) -> list[str]:
        """Every violation in document order; empty means valid."""
        out: list[str] = []
        n, m = len(self.crs), len(self.trs)
        for label, catalog in (("crs", self.crs), ("trs", self.trs), ("criteria", self.criteria)):
            if not catalog:
                out.append(f"{label} must not be empty")
            codes = [code for code, _ in catalog]
            for code in sorted({c for c in codes if codes.count(c) > 1}):
                out.append(f"duplicate code {code!r} in {label}")
        if not self.respondents:
            out.append("respondents must not be empty")
        if len(set(self.respondents)) != len(self.respondents):
            out.append("respondent ids must be unique")

        out.extend(self._judgment_problems())
        out.extend(self._grid_problems(n, m))
        out.extend(self.config.problems())
        return out

    def _judgment_problems(self) -> list[str]:
        out: list[str] = []
        c = len(self.criteria)
        n = len(self.crs)
        expected = set(self.respondents)
        for slot, size, table in [("criteria", c, self.criteria_judgments)] + [
            (code, n, self.local_judgments.get(code, {})) for code, _ in self.criteria
        ]:
            for extra in sorted(set(table) - expected):
                out.append(f"judgments[{slot!r}] has unknown respondent {extra!r}")
            for respondent in self.respondents:
                if respondent not in table:
                    out.append(f"judgments[{slot!r}] missing respondent {respondent!r}")
                    continue
                locus = f"judgments[{slot!r}][{respondent!r}]"
                matrix = np.asarray(table[respondent], dtype=float)
                if matrix.shape != (size, size):
                    out.append(f"{locus} must be {size}x{size}, got {matrix.shape}")
                    continue
                out.extend(f"{locus}: {p}" for p in ahp.matrix_problems(matrix, size))
        for extra in sorted(set(self.local_judgments) - {code for code, _ in self.criteria}):
            out.append(f"judgments['local'] has unknown criterion {extra!r}")
        return out

    def _grid_problems(self, n: int, m: int) -> list[str]:
        out: list[str] = []
        if len(self.relationships) != n:
            out.append(f"relationships grid has {len(self.relationships)} rows for {n} CRs")
        for i, row in enumerate(self.relationships):
            if len(row) != m:
                out.append(f"relationships row {i} has {len(row)} cells for {m} TRs")
                continue
            for j, token in enumerate(row):
                try:
                    RelationshipDegree.from_token(token)
                except UnknownLinguisticToken:
                    out.append(f"relationships[{i}][{j}]: unknown token {token!r}")
        if len(self.roof) != max(m - 1, 0):
            out.append(f"roof has {len(self.roof)} rows, expected {max(m - 1, 0)} for {m} TRs")
        else:
            for k, row in enumerate(self.roof):
                if len(row) != m - 1 - k:
                    out.append(f"roof row {k} has {len(row)} cells, expected {m - 1 - k}")
                    continue
                for offset, token in enumerate(row):
                    try:
                        CorrelationDegree.from_token(token)
                    except UnknownLinguisticToken:
                        out.append(f"roof[{k}][{k + 1 + offset}]: unknown token {token!r}")
        return out

    def require_valid(self) -> "HoqProject":
        problems = self.problems()
        if problems:
            raise ValidationError(problems)
        return self

    # -- editing -----------------------------------------------------------------

    def matrix_slots(self) -> list[str]:
        """Editable matrix slots: 'criteria' plus one slot per criterion code."""
        return ["criteria"] + [code for code, _ in self.criteria]

    def judgment_table(self, slot: str) -> dict[str, np.ndarray]:
        if slot == "criteria":
            return self.criteria_judgments
        if slot in self.local_judgments:
            return self.local_judgments[slot]
        raise ValidationError([f"unknown matrix slot {slot!r}"])

    def set_judgment(self, slot: str, respondent: str, i: int, j: int, value: float) -> None:
        """Set one pairwise judgment; the mirror cell gets the exact reciprocal."""
        table = self.judgment_table(slot)
        if respondent not in table:
            raise ValidationError([f"unknown respondent {respondent!r} for slot {slot!r}"])
        matrix = table[respondent]
        size = matrix.shape[0]
        if not (0 <= i < size and 0 <= j < size) or i == j:
            raise ValidationError([f"judgment position ({i},{j}) invalid for a {size}x{size} matrix"])
        if not (np.isfinite(value) and value > 0):
            raise NonPositiveJudgment(f"judgment must be positive, got {value}", locus=f"({i},{j})")
        matrix[i, j] = value
        matrix[j, i] = 1.0 / value

    def set_relationship(self, row: int, col: int, token: str) -> None:
        if not (0 <= row < len(self.crs) and 0 <= col < len(self.trs)):
            raise ValidationError([f"relationship cell ({row},{col}) out of range"])
        degree = RelationshipDegree.from_token(token, locus=f"relationships[{row}][{col}]")
        self.relationships[row][col] = degree.token

    def set_roof(self, k: int, j: int, token: str) -> None:
        m = len(self.trs)
        if not (0 <= k < m and 0 <= j < m) or k == j:
            raise ValidationError([f"roof cell ({k},{j}) invalid for {m} TRs"])
        degree = CorrelationDegree.from_token(token, locus=f"roof[{k}][{j}]")
        lo, hi = min(k, j), max(k, j)
        self.roof[lo][hi - lo - 1] = degree.token

    def roof_token(self, k: int, j: int) -> str:
        if k == j:
            return ""
        lo, hi = min(k, j), max(k, j)
        return self.roof[lo][hi - lo - 1]

    def clone(self) -> "HoqProject":
        return copy.deepcopy(self)


# -- document mapping -------------------------------------------------------------


def to_document(project: HoqProject) -> dict:
    """Plain-JSON form of a project, canonical field order."""
    return {
        "schema_version": project.schema_version,
        "name": project.name,
        "crs": [[code, label] for code, label in project.crs],
        "trs": [[code, label] for code, label in project.trs],
        "criteria": [[code, label] for code, label in project.criteria],
        "respondents": list(project.respondents),
        "judgments": {
            "criteria": {
                r: _canonical_matrix(project.criteria_judgments[r])
                for r in project.respondents
                if r in project.criteria_judgments
            },
            "local": {
                code: {
                    r: _canonical_matrix(table[r])
                    for r in project.respondents
                    if r in table
                }
                for code, table in (
                    (code, project.local_judgments.get(code, {}))
                    for code, _ in project.criteria
                )
            },
        },
        "relationships": [list(row) for row in project.relationships],
        "roof": [list(row) for row in project.roof],
        "config": {
            "consistency_threshold": project.config.consistency_threshold,
            "power_tolerance": project.config.power_tolerance,
            "max_iterations": project.config.max_iterations,
            "tie_break": project.config.tie_break,
        },
    }


def _canonical_matrix(matrix: np.ndarray) -> list[list[float]]:
    m = np.asarray(matrix, dtype=float)
    out = np.eye(m.shape[0])
    for i in range(m.shape[0]):
        for j in range(i + 1, m.shape[1]):
            out[i, j] = m[i, j]
            out[j, i] = 1.0 / m[i, j]
    return [[float(x) for x in row] for row in out]


def from_document(doc) -> HoqProject:
    """Parse and validate a plain-JSON document into a project.

    Raises SchemaVersionUnsupported for missing/foreign versions and
    ValidationError listing every structural violation otherwise.
    """
    if not isinstance(doc, dict):
        raise ParseError(f"project document must be an object, got {type(doc).__name__}")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaVersionUnsupported(
            f"schema_version {version!r} is not supported (this build reads version {SCHEMA_VERSION})"
        )
    problems: list[str] = []
    for key in doc:
        if key not in _TOP_LEVEL_FIELDS:
            problems.append(f"unknown field {key!r} (not part of schema_version {SCHEMA_VERSION})")

    name = doc.get("name")
    if not isinstance(name, str) or not name:
        problems.append("name must be a non-empty string")
        name = ""

    catalogs: dict[str, list[tuple[str, str]]] = {}
    for label in ("crs", "trs", "criteria"):
        catalogs[label] = _parse_catalog(doc.get(label), label, problems)

    respondents = doc.get("respondents")
    if not (isinstance(respondents, list) and all(isinstance(r, str) for r in respondents)):
        problems.append("respondents must be a list of strings")
        respondents = []

    criteria_judgments, local_judgments = _parse_judgments(
        doc.get("judgments"), catalogs["criteria"], problems
    )

    relationships = _parse_token_grid(doc.get("relationships"), "relationships", problems)
    roof = _parse_token_grid(doc.get("roof"), "roof", problems)

    config = _parse_config(doc.get("config"), problems)

    if problems:
        raise ValidationError(problems)

    project = HoqProject(
        name=name,
        crs=catalogs["crs"],
        trs=catalogs["trs"],
        criteria=catalogs["criteria"],
        respondents=list(respondents),
        criteria_judgments=criteria_judgments,
        local_judgments=local_judgments,
        relationships=relationships,
        roof=roof,
        config=config,
    )
    return project.require_valid()


def _parse_catalog(raw, label: str, problems: list[str]) -> list[tuple[str, str]]:
    if not isinstance(raw, list):
        problems.append(f"{label} must be a list of [code, label] pairs")
        return []
    out = []
    for k, entry in enumerate(raw):
        if (
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(x, str) for x in entry)
            and entry[0]
        ):
            out.append((entry[0], entry[1]))
        else:
            problems.append(f"{label}[{k}] must be a [code, label] pair of strings")
    return out


def _parse_judgments(raw, criteria, problems):
    criteria_judgments: dict[str, np.ndarray] = {}
    local_judgments: dict[str, dict[str, np.ndarray]] = {code: {} for code, _ in criteria}
    if not isinstance(raw, dict):
        problems.append("judgments must be an object with 'criteria' and 'local'")
        return criteria_judgments, local_judgments
    for key in raw:
        if key not in ("criteria", "local"):
            problems.append(f"judgments has unknown key {key!r}")

    criteria_judgments.update(_parse_matrix_table(raw.get("criteria"), "judgments['criteria']", problems))

    local = raw.get("local")
    if not isinstance(local, dict):
        problems.append("judgments['local'] must be an object keyed by criterion code")
        return criteria_judgments, local_judgments
    known = {code for code, _ in criteria}
    for code, table in local.items():
        if code not in known:
            problems.append(f"judgments['local'] has unknown criterion {code!r}")
            continue
        local_judgments[code] = _parse_matrix_table(table, f"judgments['local'][{code!r}]", problems)
    return criteria_judgments, local_judgments


def _parse_matrix_table(raw, locus: str, problems: list[str]) -> dict[str, np.ndarray]:
    out: dict[str, np.ndarray] = {}
    if not isinstance(raw, dict):
        problems.append(f"{locus} must be an object keyed by respondent id")
        return out
    for respondent, rows in raw.items():
        try:
            matrix = np.asarray(rows, dtype=float)
        except (TypeError, ValueError):
            problems.append(f"{locus}[{respondent!r}] must be a numeric grid")
            continue
        if matrix.ndim != 2:
            problems.append(f"{locus}[{respondent!r}] must be a 2-d grid")
            continue
        out[respondent] = matrix
    return out


def _parse_token_grid(raw, label: str, problems: list[str]) -> list[list[str]]:
    if not isinstance(raw, list):
        problems.append(f"{label} must be a list of token rows")
        return []
    out = []
    for i, row in enumerate(raw):
        if not (isinstance(row, list) and all(isinstance(t, str) for t in row)):
            problems.append(f"{label}[{i}] must be a list of string tokens")
            out.append([])
        else:
            out.append(list(row))
    return out


def _parse_config(raw, problems: list[str]) -> ProjectConfig:
    config = ProjectConfig()
    if raw is None:
        return config
    if not isinstance(raw, dict):
        problems.append("config must be an object")
        return config
    known = {
        "consistency_threshold": float,
        "power_tolerance": float,
        "max_iterations": int,
        "tie_break": str,
    }
    for key, value in raw.items():
        if key not in known:
            problems.append(f"config has unknown key {key!r}")
            continue
        kind = known[key]
        if kind is float and isinstance(value, (int, float)) and not isinstance(value, bool):
            setattr(config, key, float(value))
        elif kind is int and isinstance(value, int) and not isinstance(value, bool):
            setattr(config, key, value)
        elif kind is str and isinstance(value, str):
            setattr(config, key, value)
        else:
            problems.append(f"config.{key} has the wrong type")
    return config


# -- files ---------------------------------------------------------------------


def load(path) -> HoqProject:
    """Read and validate a project file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}") from e
    return from_document(doc)


def save(project: HoqProject, path) -> None:
    """Validate, then write atomically (temp file + rename)."""
    project.require_valid()
    doc = to_document(project)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".fuzzyhoq-", suffix=".json", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# -- delimiter-separated imports --------------------------------------------------


def import_matrix_csv(path, kind: str, delimiter: str = ","):
    """Import a pairwise matrix or a linguistic grid from a delimited table.

    kind "pairwise": numeric cells; a table with a blank lower triangle is
    auto-filled with reciprocals, a full table is validated for reciprocity.
    Cells accept decimals or fractions like "1/3".
    kind "relationships": S / M / W / blank tokens, returns a token grid.
    kind "roof": full square +/-/blank table with an empty diagonal,
    validated symmetric, returned as upper-triangle token rows.
    """
    import csv

    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = [list(row) for row in csv.reader(fh, delimiter=delimiter)]
    rows = [row for row in rows if row]  # drop empty lines, keep all-blank cells
    if not rows:
        raise ParseError(f"{path}: empty table")

    if kind == "pairwise":
        return _import_pairwise(rows, path)
    if kind == "relationships":
        return [
            [
                RelationshipDegree.from_token(cell, locus=f"row {i + 1}, column {j + 1}").token
                for j, cell in enumerate(row)
            ]
            for i, row in enumerate(rows)
        ]
    if kind == "roof":
        return _import_roof(rows, path)
    raise ValueError(f"unknown import kind {kind!r}")


def _parse_ratio(cell: str, locus: str) -> float:
    text = cell.strip()
    try:
        return float(Fraction(text))
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"{locus}: cannot parse {cell!r} as a ratio") from e


def _import_pairwise(rows, path) -> ahp.PairwiseMatrix:
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValidationError([f"{path}: pairwise table must be {n}x{n}"])
    blank_lower = all(not rows[i][j].strip() for i in range(n) for j in range(i))
    if blank_lower:
        judgments = []
        for i in range(n):
            for j in range(i + 1, n):
                cell = rows[i][j]
                if cell.strip():
                    judgments.append((i, j, _parse_ratio(cell, f"{path}: row {i + 1}, column {j + 1}")))
        return ahp.build_matrix(n, judgments)
    entries = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            cell = rows[i][j].strip()
            if i == j and not cell:
                entries[i, j] = 1.0
            else:
                entries[i, j] = _parse_ratio(rows[i][j], f"{path}: row {i + 1}, column {j + 1}")
    return ahp.matrix_from_entries(entries)


def _import_roof(rows, path) -> list[list[str]]:
    m = len(rows)
    problems = []
    if any(len(row) != m for row in rows):
        raise ValidationError([f"{path}: roof table must be {m}x{m}"])
    grid = [
        [
            CorrelationDegree.from_token(cell, locus=f"row {k + 1}, column {j + 1}")
            for j, cell in enumerate(row)
        ]
        for k, row in enumerate(rows)
    ]
    for k in range(m):
        if grid[k][k] is not CorrelationDegree.NONE:
            problems.append(f"{path}: roof diagonal ({k + 1},{k + 1}) must be blank")
        for j in range(k + 1, m):
            if grid[k][j] is not grid[j][k]:
                problems.append(f"{path}: roof not symmetric at ({k + 1},{j + 1})")
    if problems:
        raise ValidationError(problems)
    return [[grid[k][j].token for j in range(k + 1, m)] for k in range(m - 1)]
