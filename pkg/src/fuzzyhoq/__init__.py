"""AHP-weighted fuzzy House of Quality toolkit.

Derive customer-requirement weights from pairwise judgments, push them
through a fuzzy House of Quality with roof correlations, and rank the
technical requirements by defuzzified priority - with a Monte-Carlo
check of how stable that ranking is.
"""

from .ahp import (
    ConsistencyReport,
    Hierarchy,
    PairwiseMatrix,
    aggregate_group,
    build_matrix,
    consistency,
    derive_weights,
    matrix_from_entries,
    synthesize,
)
from .dataset import bundled_paper_project
from .fuzzy import TFN, CorrelationDegree, RelationshipDegree
from .hoq import HoqModel, PriorityReport, TrPriority, rank
from .pipeline import build_model, compute_ahp, compute_rank, group_hierarchy
from .project import HoqProject, ProjectConfig, import_matrix_csv, load, save
from .sensitivity import PerturbationSpec, StabilityReport, run_sensitivity

__version__ = "0.1.0"

__all__ = [
    "TFN",
    "RelationshipDegree",
    "CorrelationDegree",
    "PairwiseMatrix",
    "ConsistencyReport",
    "Hierarchy",
    "build_matrix",
    "matrix_from_entries",
    "derive_weights",
    "consistency",
    "aggregate_group",
    "synthesize",
    "HoqModel",
    "TrPriority",
    "PriorityReport",
    "rank",
    "HoqProject",
    "ProjectConfig",
    "load",
    "save",
    "import_matrix_csv",
    "bundled_paper_project",
    "group_hierarchy",
    "compute_ahp",
    "compute_rank",
    "build_model",
    "PerturbationSpec",
    "StabilityReport",
    "run_sensitivity",
    "__version__",
]
