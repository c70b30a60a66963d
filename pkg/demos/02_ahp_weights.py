"""From pairwise judgments to priority weights.

Respondents compare requirements two at a time on the 1..9 scale;
the principal eigenvector of the resulting reciprocal matrix gives the
weights, and the consistency ratio says whether the judgments cohere.
"""

import numpy as np

from fuzzyhoq import (
    Hierarchy,
    aggregate_group,
    build_matrix,
    consistency,
    derive_weights,
    matrix_from_entries,
    synthesize,
)

print("One respondent, three requirements")
print("=" * 60)
# upper triangle only; reciprocals are filled in automatically
matrix = build_matrix(
    3,
    [(0, 1, 2.0), (0, 2, 4.0), (1, 2, 2.0)],
    element_ids=("taste", "shelf life", "price"),
)
print(np.array_str(np.asarray(matrix.entries), precision=3))
weights = derive_weights(matrix)
for eid, w in zip(matrix.element_ids, weights):
    print(f"  {eid:<11} {w:.4f}")
report = consistency(matrix)
print(f"  lambda_max={report.lambda_max:.4f}  ci={report.ci:.4f}  cr={report.cr:.4f}")
print("  a_02 = a_01 * a_12, so the judgments are perfectly consistent: cr = 0")

print()
print("An intransitive respondent trips the consistency alarm")
print("=" * 60)
sloppy = matrix_from_entries([[1, 3, 0.5], [1 / 3, 1, 4], [2, 0.25, 1]])
report = consistency(sloppy)
print(f"  cr = {report.cr:.3f}  acceptable: {report.acceptable}")
print("  (A beats B, B beats C, yet C beats A; revise before trusting weights)")

print()
print("Group aggregation: geometric mean keeps reciprocity")
print("=" * 60)
quiet = build_matrix(2, [(0, 1, 2.0)])
bold = build_matrix(2, [(0, 1, 8.0)])
merged = aggregate_group([quiet, bold])
print(f"  judgments 2 and 8 merge to {merged.entries[0, 1]:.0f} (sqrt(2*8))")

print()
print("Two-level hierarchy: criteria weights blend the local weights")
print("=" * 60)
criteria = matrix_from_entries([[1, 1.5], [1 / 1.5, 1]], ("quality", "cost"))
local = {
    "quality": matrix_from_entries([[1, 1], [1, 1]], ("CR1", "CR2")),
    "cost": matrix_from_entries([[1, 1 / 3], [3, 1]], ("CR1", "CR2")),
}
hierarchy = Hierarchy(criteria_matrix=criteria, local_matrices=local)
global_weights = synthesize(hierarchy)
print(f"  criteria weights   : {derive_weights(criteria).round(4)}")
print(f"  CR1 local weights  : quality 0.50, cost 0.25")
print(f"  global CR weights  : {global_weights.round(4)}  (0.6*0.5 + 0.4*0.25 = 0.40)")
