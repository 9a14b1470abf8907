"""Dataset ingestion, validation, and synthetic reconstruction.

The on-disk format is a single wide CSV, ``id,gold,<team1>,...,<teamK>``,
UTF-8, comma-delimited, header in the first row. Label tokens containing
commas are rejected rather than quoted, so files round-trip byte-for-byte.

``reconstruct`` builds a dataset from per-team (tp, fp) confusion counts.
Marginal metrics of the result are exact; joint agreement between teams is
synthetic (errors placed independently per team), so paired quantities are
only approximately reproduced for real leaderboards.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    CountOutOfRange,
    DuplicateId,
    EmptyCell,
    LengthMismatch,
    MissingColumn,
    UnknownPositiveLabel,
)

DEFAULT_NEGATIVE = "non-offensive"
DEFAULT_POSITIVE = "offensive"


@dataclass(frozen=True)
class LabeledDataset:
    """Gold labels plus aligned per-team prediction columns."""

    ids: tuple[str, ...]
    gold: np.ndarray
    teams: dict[str, np.ndarray]
    positive: str

    def __post_init__(self):
        n = len(self.ids)
        if n < 1:
            raise LengthMismatch("dataset must contain at least one example")
        if len(self.gold) != n:
            raise LengthMismatch(f"gold column has {len(self.gold)} entries, expected {n}")
        if not self.teams:
            raise MissingColumn("dataset must contain at least one team column")
        for team, col in self.teams.items():
            if not team:
                raise MissingColumn("team names must be non-empty")
            if len(col) != n:
                raise LengthMismatch(
                    f"team {team!r} column has {len(col)} entries, expected {n}"
                )
        if not self.positive:
            raise UnknownPositiveLabel("positive label must be a non-empty token")

    @property
    def n(self) -> int:
        return len(self.ids)

    @property
    def team_names(self) -> tuple[str, ...]:
        return tuple(self.teams)


def _check_token(token: str, where: str) -> str:
    if token == "":
        raise EmptyCell(f"empty cell at {where}")
    if "," in token:
        raise EmptyCell(f"token containing a comma at {where} (quoting is not supported)")
    return token


def load(path: str | Path, positive: str) -> LabeledDataset:
    """Load and validate a wide gold+predictions CSV."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MissingColumn(f"{path}: file is empty") from None
        if len(header) < 2 or header[0] != "id" or header[1] != "gold":
            raise MissingColumn(f"{path}: header must start with 'id,gold', got {header[:2]}")
        team_names = header[2:]
        if not team_names:
            raise MissingColumn(f"{path}: no team columns after 'gold'")
        if len(set(team_names)) != len(team_names):
            raise DuplicateId(f"{path}: duplicate team column names")
        ids: list[str] = []
        gold: list[str] = []
        cols: list[list[str]] = [[] for _ in team_names]
        seen: set[str] = set()
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise LengthMismatch(
                    f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}"
                )
            ex_id = _check_token(row[0], f"{path}:{lineno} (id)")
            if ex_id in seen:
                raise DuplicateId(f"{path}:{lineno}: duplicate id {ex_id!r}")
            seen.add(ex_id)
            ids.append(ex_id)
            gold.append(_check_token(row[1], f"{path}:{lineno} (gold)"))
            for k, team in enumerate(team_names):
                cols[k].append(_check_token(row[2 + k], f"{path}:{lineno} ({team})"))
    if positive not in gold:
        raise UnknownPositiveLabel(
            f"{path}: positive label {positive!r} never occurs in the gold column"
        )
    teams = {t: np.asarray(c) for t, c in zip(team_names, cols)}
    return LabeledDataset(tuple(ids), np.asarray(gold), teams, positive)


def write(ds: LabeledDataset, path: str | Path) -> None:
    """Write a dataset back to the wide CSV format. Inverse of load."""
    path = Path(path)
    for i, token in enumerate(ds.ids):
        _check_token(token, f"id row {i}")
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, quoting=csv.QUOTE_NONE)
        w.writerow(["id", "gold", *ds.teams])
        cols = list(ds.teams.values())
        for i, ex_id in enumerate(ds.ids):
            w.writerow([ex_id, ds.gold[i], *(c[i] for c in cols)])


@dataclass(frozen=True)
class ReconstructionSpec:
    """Class sizes plus per-team (tp, fp) counts to rebuild a dataset from."""

    n_pos: int
    n_neg: int
    teams: dict[str, tuple[int, int]] = field(default_factory=dict)

    def __post_init__(self):
        if self.n_pos < 1 or self.n_neg < 0:
            raise CountOutOfRange(f"invalid class sizes n_pos={self.n_pos}, n_neg={self.n_neg}")
        for team, (tp, fp) in self.teams.items():
            if not (0 <= tp <= self.n_pos):
                raise CountOutOfRange(f"{team}: tp={tp} outside [0, {self.n_pos}]")
            if not (0 <= fp <= self.n_neg):
                raise CountOutOfRange(f"{team}: fp={fp} outside [0, {self.n_neg}]")

    @classmethod
    def from_json(cls, path: str | Path) -> "ReconstructionSpec":
        with Path(path).open(encoding="utf-8") as fh:
            raw = json.load(fh)
        teams = {name: (int(c["tp"]), int(c["fp"])) for name, c in raw["teams"].items()}
        return cls(int(raw["n_pos"]), int(raw["n_neg"]), teams)

    def to_json(self, path: str | Path) -> None:
        raw = {
            "n_pos": self.n_pos,
            "n_neg": self.n_neg,
            "teams": {t: {"tp": tp, "fp": fp} for t, (tp, fp) in self.teams.items()},
        }
        Path(path).write_text(json.dumps(raw, indent=2) + "\n", encoding="utf-8")


def reconstruct(
    spec: ReconstructionSpec,
    seed: int,
    positive: str = DEFAULT_POSITIVE,
    negative: str = DEFAULT_NEGATIVE,
) -> LabeledDataset:
    """Build a synthetic dataset whose confusion counts match ``spec`` exactly.

    Gold is n_pos positives followed by n_neg negatives. For each team the
    seeded stream picks which positives it gets right (tp of them) and which
    negatives it gets wrong (fp of them); errors are placed independently
    across teams.
    """
    rng = np.random.default_rng(seed)
    n = spec.n_pos + spec.n_neg
    gold = np.asarray([positive] * spec.n_pos + [negative] * spec.n_neg)
    teams: dict[str, np.ndarray] = {}
    for team, (tp, fp) in spec.teams.items():
        col = np.asarray([negative] * n, dtype=gold.dtype)
        hit = rng.choice(spec.n_pos, size=tp, replace=False)
        col[hit] = positive
        err = spec.n_pos + rng.choice(spec.n_neg, size=fp, replace=False)
        col[err] = positive
        teams[team] = col
    ids = tuple(f"ex{i:05d}" for i in range(n))
    return LabeledDataset(ids, gold, teams, positive)
