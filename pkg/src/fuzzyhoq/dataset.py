"""Bundled example: a saffron solar-dryer questionnaire, ready to rank.

The CR/TR catalogs are the real ones for this product domain.  Everything
else - pairwise judgments, relationship grid, roof - is an ILLUSTRATIVE
synthetic completion, generated deterministically so the example is
reproducible.  It is meant for demos, smoke tests, and as a template for
entering a real survey; the numbers it produces describe no actual study.

Run ``python -m fuzzyhoq.dataset out.json`` to write it as a project file.
"""

from __future__ import annotations

import math

import numpy as np

from .ahp import SAATY_LADDER
from .project import HoqProject, ProjectConfig

__all__ = ["bundled_paper_project"]

_CRS = [
    ("CR1", "Durability"),
    ("CR2", "Energy saving"),
    ("CR3", "Low required space"),
    ("CR4", "High efficiency"),
    ("CR5", "Cost-effectiveness"),
    ("CR6", "User-friendly"),
    ("CR7", "Usable for different amount"),
    ("CR8", "Useable for similar products"),
    ("CR9", "Using alternative energy"),
    ("CR10", "Hygiene"),
    ("CR11", "Organoleptic properties"),
    ("CR12", "Easy Installation"),
    ("CR13", "Easy Portability"),
    ("CR14", "Drying time"),
]

_TRS = [
    ("TR1", "Controlled conditions of temperature, humidity and time"),
    ("TR2", "Materials used for the air collector"),
    ("TR3", "Collector area"),
    ("TR4", "Absorber coating"),
    ("TR5", "The length and width of the air duct"),
    ("TR6", "Thermal energy gained from solar radiation"),
    ("TR7", "Photovoltaic cell as the power source of the fan(s)"),
    ("TR8", "Material of the trays and their distances"),
    ("TR9", "Complete gasket and no influence on air pollution and dust"),
    ("TR10", "Materials used for the cabinet dryer for the heat transfer enhancement"),
    ("TR11", "Heat insulation to enhance heat transfer"),
    ("TR12", "Air temperature and humidity"),
    ("TR13", "Air flow rate & velocity"),
    ("TR14", "Calibration of thermometers and timers"),
]

_CRITERIA = [
    ("QUALITY", "Improving product quality"),
    ("COST", "Cost"),
    ("SERVICE", "Services"),
]

_RESPONDENTS = ["customer-1", "customer-2", "customer-3"]

# Latent importance scores (1..9 points) behind the synthetic judgments.
# Chosen so organoleptic properties and hygiene head the CR ranking.
_CRITERIA_SCORES = [5.0, 3.0, 2.0]
_CR_SCORES = {
    "QUALITY": [6.0, 3.0, 1.5, 5.0, 3.0, 2.0, 1.8, 1.8, 2.5, 8.0, 9.0, 1.5, 1.4, 5.0],
    "COST": [6.0, 7.0, 3.0, 6.0, 9.0, 2.5, 3.0, 3.5, 6.0, 4.0, 4.5, 2.5, 2.0, 4.0],
    "SERVICE": [4.0, 3.0, 4.0, 3.5, 4.0, 7.0, 5.0, 4.5, 3.0, 5.0, 5.0, 6.5, 6.0, 4.5],
}

# Expert HOQ grids written as one row string per CR ('.' = empty cell).
_RELATIONSHIP_ROWS = [
    ".M.W...MSSM..W",  # CR1  durability
    "..M..SS.MMS.M.",  # CR2  energy saving
    "..S.M..W......",  # CR3  low required space
    "M.MM.S....MSS.",  # CR4  high efficiency
    ".MM.W.MW.M....",  # CR5  cost-effectiveness
    "M..........W.M",  # CR6  user-friendly
    "..M.M..M......",  # CR7  different amounts
    "M......M...W..",  # CR8  similar products
    ".....SS.......",  # CR9  alternative energy
    "S......MS..M.M",  # CR10 hygiene
    "S.......S..SSM",  # CR11 organoleptic properties
    ".W..M.W.......",  # CR12 easy installation
    ".WM.M.........",  # CR13 easy portability
    "M....M.....SSM",  # CR14 drying time
]

# Upper-triangle roof rows: row k covers TR pairs (k, k+1) .. (k, 14).
_ROOF_ROWS = [
    ".............",  # TR1
    "...+........",   # TR2 - TR6 (collector materials help solar gain)
    ".-+........",    # TR3 - TR5 negative, TR3 - TR6 positive
    ".+........",     # TR4 - TR6
    ".......+.",      # TR5 - TR13
    "........",       # TR6
    ".....+.",        # TR7 - TR13
    "......",         # TR8
    ".++..",          # TR9 - TR11, TR9 - TR12 (sealing keeps heat and climate)
    "+...",           # TR10 - TR11
    "...",            # TR11
    "..",             # TR12
    ".",              # TR13
]


def _snap_to_ladder(ratio: float) -> float:
    """Nearest judgment on the nine-point ladder, in log distance."""
    return min(SAATY_LADDER, key=lambda v: abs(math.log(ratio) - math.log(v)))


def _judgment_matrix(scores, rng: np.random.Generator, jitter: float = 0.05) -> np.ndarray:
    """Reciprocal matrix whose judgments are jittered latent ratios, snapped."""
    latent = np.asarray(scores) * np.exp(rng.normal(0.0, jitter, len(scores)))
    n = len(latent)
    m = np.eye(n)
    for i in range(n):
        for j in range(i + 1, n):
            v = _snap_to_ladder(latent[i] / latent[j])
            m[i, j] = v
            m[j, i] = 1.0 / v
    return m


def _token_rows(rows: list[str]) -> list[list[str]]:
    return [["" if ch == "." else ch for ch in row] for row in rows]


def bundled_paper_project() -> HoqProject:
    """The bundled saffron solar-dryer project (synthetic judgments)."""
    criteria_judgments: dict[str, np.ndarray] = {}
    local_judgments: dict[str, dict[str, np.ndarray]] = {code: {} for code, _ in _CRITERIA}
    for r_index, respondent in enumerate(_RESPONDENTS):
        rng = np.random.default_rng([7754, r_index])
        criteria_judgments[respondent] = _judgment_matrix(_CRITERIA_SCORES, rng)
        for code, _ in _CRITERIA:
            local_judgments[code][respondent] = _judgment_matrix(_CR_SCORES[code], rng)
    return HoqProject(
        name="saffron-solar-dryer-demo (synthetic illustrative judgments)",
        crs=list(_CRS),
        trs=list(_TRS),
        criteria=list(_CRITERIA),
        respondents=list(_RESPONDENTS),
        criteria_judgments=criteria_judgments,
        local_judgments=local_judgments,
        relationships=_token_rows(_RELATIONSHIP_ROWS),
        roof=_token_rows(_ROOF_ROWS),
        config=ProjectConfig(),
    )


def main(argv=None) -> int:
    import argparse

    from .project import save

    parser = argparse.ArgumentParser(description="write the bundled example project file")
    parser.add_argument("path", help="destination project file (JSON)")
    args = parser.parse_args(argv)
    save(bundled_paper_project(), args.path)
    print(f"wrote {args.path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
