"""Project files: the portable questionnaire format.

One JSON document per study: catalogs, per-respondent judgment
matrices, the linguistic grids, and config.  Files are diffable,
validate strictly, and round-trip exactly.
"""

import json
import tempfile
from pathlib import Path

from fuzzyhoq import bundled_paper_project, import_matrix_csv, load, save
from fuzzyhoq.errors import ValidationError
from fuzzyhoq.project import to_document

workdir = Path(tempfile.mkdtemp(prefix="fuzzyhoq-demo-"))
path = workdir / "saffron.json"

project = bundled_paper_project()
save(project, path)
print(f"wrote {path} ({path.stat().st_size // 1024} KB)")

reloaded = load(path)
print(f"round-trip identical: {to_document(reloaded) == to_document(project)}")

print()
print("Validation collects every violation, not just the first")
print("=" * 60)
doc = to_document(project)
doc["relationships"] = doc["relationships"][:13]   # one row short
doc["crs"][1] = ["CR1", "duplicated code"]
doc["roof"][0][0] = "Q"                            # not a correlation token
broken = workdir / "broken.json"
broken.write_text(json.dumps(doc))
try:
    load(broken)
except ValidationError as e:
    for problem in e.problems:
        print(f"  - {problem}")

print()
print("Questionnaires arrive as delimiter-separated tables")
print("=" * 60)
upper = workdir / "judgments.csv"
upper.write_text("1,3,5\n,1,2\n,,1\n")
matrix = import_matrix_csv(upper, "pairwise")
print(f"  upper triangle auto-filled; entry (2,0) = {matrix.entries[2, 0]:.3f}")

grid = workdir / "grid.csv"
grid.write_text("S,,M\nW,S,\n")
print(f"  relationship grid: {import_matrix_csv(grid, 'relationships')}")
