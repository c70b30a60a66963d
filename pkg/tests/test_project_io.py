"""Project file round-trips, validation error collection, CSV imports."""

import json

import numpy as np
import pytest

from conftest import make_project, random_reciprocal_matrix
from fuzzyhoq.dataset import bundled_paper_project
from fuzzyhoq.errors import (
    ParseError,
    SchemaVersionUnsupported,
    UnknownLinguisticToken,
    ValidationError,
)
from fuzzyhoq.project import (
    from_document,
    import_matrix_csv,
    load,
    save,
    to_document,
)

REL_TOKENS = ["", "W", "M", "S"]
CORR_TOKENS = ["", "-", "+"]


def random_project(rng):
    n = int(rng.integers(1, 5))
    m = int(rng.integers(1, 5))
    c = int(rng.integers(1, 4))
    respondents = [f"r{k}" for k in range(int(rng.integers(1, 4)))]
    criteria = [(f"C{k}", f"criterion {k}") for k in range(c)]
    return make_project(
        name=f"random-{rng.integers(1e6)}",
        crs=[(f"CR{i + 1}", f"need {i + 1}") for i in range(n)],
        trs=[(f"TR{j + 1}", f"measure {j + 1}") for j in range(m)],
        criteria=criteria,
        respondents=respondents,
        criteria_matrix=random_reciprocal_matrix(rng, c),
        local_matrices={code: random_reciprocal_matrix(rng, n) for code, _ in criteria},
        relationships=[[str(rng.choice(REL_TOKENS)) for _ in range(m)] for _ in range(n)],
        roof=[[str(rng.choice(CORR_TOKENS)) for _ in range(m - 1 - k)] for k in range(m - 1)],
    )


class TestRoundTrip:
    def test_bundled_round_trips(self, tmp_path):
        p = bundled_paper_project()
        path = tmp_path / "bundled.json"
        save(p, path)
        assert to_document(load(path)) == to_document(p)

    def test_random_projects_round_trip(self, tmp_path):
        rng = np.random.default_rng(71)
        for k in range(25):
            p = random_project(rng)
            path = tmp_path / f"p{k}.json"
            save(p, path)
            assert to_document(load(path)) == to_document(p)

    def test_save_canonicalizes_lower_triangle(self, tmp_path):
        p = make_project()
        p.criteria_judgments["r1"] = np.array([[1.0, 3.0], [1 / 3 + 1e-10, 1.0]])
        p.criteria = [("C1", "a"), ("C2", "b")]
        p.local_judgments = {"C1": {"r1": np.ones((1, 1))}, "C2": {"r1": np.ones((1, 1))}}
        path = tmp_path / "canon.json"
        save(p, path)
        doc = json.loads(path.read_text())
        assert doc["judgments"]["criteria"]["r1"][1][0] == 1.0 / 3.0

    def test_save_is_atomic_leaves_no_droppings(self, tmp_path):
        p = bundled_paper_project()
        path = tmp_path / "a.json"
        save(p, path)
        save(p, path)
        assert sorted(f.name for f in tmp_path.iterdir()) == ["a.json"]


class TestParsing:
    def test_malformed_json_gives_parse_error_with_location(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text('{"schema_version": 1,\n  "name": }')
        with pytest.raises(ParseError, match=r"line 2"):
            load(path)

    def test_schema_version_999(self):
        with pytest.raises(SchemaVersionUnsupported):
            from_document({"schema_version": 999})

    def test_missing_schema_version(self):
        with pytest.raises(SchemaVersionUnsupported):
            from_document({"name": "x"})

    def test_unknown_field_rejected_with_version(self):
        doc = to_document(bundled_paper_project())
        doc["future_field"] = 1
        with pytest.raises(ValidationError) as exc:
            from_document(doc)
        assert any("future_field" in p and "schema_version 1" in p for p in exc.value.problems)

    def test_wrong_grid_shape_names_the_grid(self):
        doc = to_document(bundled_paper_project())
        doc["relationships"] = doc["relationships"][:13]  # 13 rows against 14 CRs
        with pytest.raises(ValidationError) as exc:
            from_document(doc)
        assert any("relationships" in p for p in exc.value.problems)

    def test_all_violations_collected(self):
        doc = to_document(bundled_paper_project())
        doc["relationships"] = doc["relationships"][:13]
        doc["crs"][1] = ["CR1", "duplicate code"]
        doc["roof"][0][0] = "Q"
        with pytest.raises(ValidationError) as exc:
            from_document(doc)
        text = "\n".join(exc.value.problems)
        assert "relationships" in text and "CR1" in text and "'Q'" in text
        assert len(exc.value.problems) >= 3

    def test_error_list_is_reproducible(self):
        doc = to_document(bundled_paper_project())
        doc["relationships"][0][0] = "X"
        doc["respondents"] = doc["respondents"] + ["customer-1"]
        problems = []
        for _ in range(2):
            with pytest.raises(ValidationError) as exc:
                from_document(doc)
            problems.append(list(exc.value.problems))
        assert problems[0] == problems[1]

    def test_non_reciprocal_matrix_reported(self):
        doc = to_document(bundled_paper_project())
        doc["judgments"]["criteria"]["customer-1"][0][1] = 5.0
        doc["judgments"]["criteria"]["customer-1"][1][0] = 5.0
        with pytest.raises(ValidationError, match="reciprocity"):
            from_document(doc)


class TestEditing:
    def test_set_judgment_mirrors_reciprocal(self):
        p = make_project(criteria=[("C1", "a"), ("C2", "b")])
        p.criteria_judgments["r1"] = np.eye(2)
        p.local_judgments = {"C1": {"r1": np.ones((1, 1))}, "C2": {"r1": np.ones((1, 1))}}
        p.set_judgment("criteria", "r1", 0, 1, 3.0)
        assert p.criteria_judgments["r1"][0][1] == 3.0
        assert p.criteria_judgments["r1"][1][0] == 1.0 / 3.0
        p.set_judgment("criteria", "r1", 1, 0, 4.0)
        assert p.criteria_judgments["r1"][0][1] == 0.25

    def test_set_relationship_and_roof_mirror(self):
        p = make_project(
            trs=[("TR1", "a"), ("TR2", "b"), ("TR3", "c")],
            relationships=[["", "", ""]],
        )
        p.set_relationship(0, 2, "m")
        assert p.relationships[0][2] == "M"
        p.set_roof(2, 0, "+")
        assert p.roof_token(0, 2) == "+"
        assert p.roof_token(2, 0) == "+"
        with pytest.raises(UnknownLinguisticToken):
            p.set_relationship(0, 0, "Q")
        with pytest.raises(ValidationError):
            p.set_roof(1, 1, "+")


class TestCsvImport:
    def test_upper_triangle_autofill(self, tmp_path):
        path = tmp_path / "upper.csv"
        path.write_text("1,3\n,1\n")
        m = import_matrix_csv(path, "pairwise")
        assert m.entries.tolist() == [[1, 3], [1 / 3, 1]]

    def test_fraction_cells(self, tmp_path):
        path = tmp_path / "frac.csv"
        path.write_text(",1/3\n,\n")
        m = import_matrix_csv(path, "pairwise")
        assert m.entries[0, 1] == pytest.approx(1 / 3, abs=1e-15)
        assert m.entries[1, 0] == pytest.approx(3.0, abs=1e-12)

    def test_full_matrix_validated_for_reciprocity(self, tmp_path):
        good = tmp_path / "full.csv"
        good.write_text("1,0.5\n2,1\n")
        assert import_matrix_csv(good, "pairwise").entries[1, 0] == 2.0
        bad = tmp_path / "bad.csv"
        bad.write_text("1,0.5\n3,1\n")
        with pytest.raises(ValidationError, match="reciprocity"):
            import_matrix_csv(bad, "pairwise")

    def test_numeric_parse_error_has_location(self, tmp_path):
        path = tmp_path / "nan.csv"
        path.write_text("1,oops\n,1\n")
        with pytest.raises(ParseError, match=r"row 1, column 2"):
            import_matrix_csv(path, "pairwise")

    def test_relationship_tokens(self, tmp_path):
        path = tmp_path / "rel.csv"
        path.write_text("S,,M\nW,S,\n")
        assert import_matrix_csv(path, "relationships") == [["S", "", "M"], ["W", "S", ""]]

    def test_unknown_token_names_cell(self, tmp_path):
        path = tmp_path / "tok.csv"
        path.write_text("S,X\n,\n")
        with pytest.raises(UnknownLinguisticToken, match=r"row 1, column 2"):
            import_matrix_csv(path, "relationships")

    def test_roof_import_symmetric(self, tmp_path):
        path = tmp_path / "roof.csv"
        path.write_text(",+,-\n+,,\n-,,\n")
        assert import_matrix_csv(path, "roof") == [["+", "-"], [""]]
        bad = tmp_path / "asym.csv"
        bad.write_text(",+\n-,\n")
        with pytest.raises(ValidationError, match="symmetric"):
            import_matrix_csv(bad, "roof")
