"""Published leaderboard of MeOffendEs@IberLEF 2021, subtask 3.

The OffendMEX test partition itself is private, but the organizers
published each team's offensive-class precision, recall, and F1 over its
n=2182 tweets (600 offensive, 1582 non-offensive). Those three numbers
pin down a team's confusion counts up to rounding, which is enough to
rebuild a synthetic dataset with identical marginal metrics:

    tp      = round(recall * n_pos)
    tp + fp = round(tp / precision)

Joint agreement between teams is not published, so paired comparisons on
the reconstruction are approximate.
"""

from __future__ import annotations

import math

from .dataset import ReconstructionSpec

N_POS = 600
N_NEG = 1582

# team -> (precision, recall, f1) as published, F1 descending
LEADERBOARD: dict[str, tuple[float, float, float]] = {
    "NLPCIC": (0.7208, 0.7100, 0.7154),
    "CIMATMTYGTO": (0.6533, 0.7600, 0.7026),
    "DCCDINFOTEC": (0.6966, 0.6733, 0.6847),
    "CIMATGTO": (0.6958, 0.6633, 0.6792),
    "UMUTeam": (0.6763, 0.6650, 0.6706),
    "Timen": (0.6081, 0.6000, 0.6040),
    "CICIPN": (0.6874, 0.5350, 0.6017),
    "xjywing": (0.3419, 0.8883, 0.4937),
    "aomar": (0.3241, 0.8750, 0.4730),
    "CENAmrita": (0.3145, 0.9183, 0.4685),
}


def counts_from_published(precision: float, recall: float, n_pos: int = N_POS):
    """Invert published (precision, recall) into integer (tp, fp) counts."""
    tp = math.floor(recall * n_pos + 0.5)
    predicted_pos = math.floor(tp / precision + 0.5)
    return tp, predicted_pos - tp


def reconstruction_spec() -> ReconstructionSpec:
    """ReconstructionSpec recovering every published team's counts."""
    teams = {
        team: counts_from_published(p, r)
        for team, (p, r, _) in LEADERBOARD.items()
    }
    return ReconstructionSpec(n_pos=N_POS, n_neg=N_NEG, teams=teams)
