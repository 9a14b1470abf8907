"""Positive-class confusion counts and the three challenge metrics.

Labels are opaque strings compared with exact (case-sensitive) equality;
one token is declared the positive class and everything else counts as
negative, so multiclass inputs degrade gracefully to positive-vs-rest.

A 0/0 metric evaluates to 0 with ``defined=False`` rather than raising:
every bootstrap replicate stays usable and reports can still count how
many replicates were degenerate.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Sequence, TYPE_CHECKING

import numpy as np

from .errors import LengthMismatch

if TYPE_CHECKING:
    from .dataset import LabeledDataset


class MetricKind(Enum):
    PRECISION = "precision"
    RECALL = "recall"
    F1 = "f1"

    def __str__(self) -> str:
        return self.value


ALL_METRICS = (MetricKind.PRECISION, MetricKind.RECALL, MetricKind.F1)


@dataclass(frozen=True)
class ConfusionCounts:
    """Positive-class confusion counts of one prediction column against gold."""

    tp: int
    fp: int
    fn_: int
    tn: int

    def __post_init__(self):
        for name in ("tp", "fp", "fn_", "tn"):
            v = getattr(self, name)
            if v < 0:
                raise ValueError(f"{name} must be non-negative, got {v}")

    @property
    def n(self) -> int:
        return self.tp + self.fp + self.fn_ + self.tn

    @property
    def n_pos(self) -> int:
        """Number of gold positives."""
        return self.tp + self.fn_

    def scaled(self, k: int) -> "ConfusionCounts":
        return ConfusionCounts(self.tp * k, self.fp * k, self.fn_ * k, self.tn * k)


@dataclass(frozen=True)
class Score:
    """A metric value in [0,1]; ``defined=False`` marks a 0/0 denominator."""

    value: float
    defined: bool = True


def confusion(gold: Sequence[str], pred: Sequence[str], positive: str) -> ConfusionCounts:
    """Count TP/FP/FN/TN of ``pred`` against ``gold`` for the positive class.

    Raises LengthMismatch if the vectors differ in length.
    """
    gold = np.asarray(gold)
    pred = np.asarray(pred)
    if gold.shape != pred.shape:
        raise LengthMismatch(
            f"gold has {gold.shape[0]} entries but pred has {pred.shape[0]}"
        )
    if gold.size == 0:
        raise LengthMismatch("label vectors must have at least one entry")
    g = gold == positive
    p = pred == positive
    tp = int(np.sum(g & p))
    fp = int(np.sum(~g & p))
    fn = int(np.sum(g & ~p))
    tn = int(np.sum(~g & ~p))
    return ConfusionCounts(tp, fp, fn, tn)


def metric_values(tp, fp, fn, kind: MetricKind):
    """Vectorized metric over parallel count arrays.

    Returns ``(values, defined)`` where undefined (0/0) entries hold 0.
    F1 is computed as 2tp / (2tp + fp + fn), which equals the harmonic
    mean of precision and recall whenever tp > 0, and is undefined for
    tp = 0 (precision, recall, or their sum degenerates there).
    """
    tp = np.asarray(tp, dtype=np.float64)
    fp = np.asarray(fp, dtype=np.float64)
    fn = np.asarray(fn, dtype=np.float64)
    if kind is MetricKind.PRECISION:
        num, den = tp, tp + fp
        defined = den > 0
    elif kind is MetricKind.RECALL:
        num, den = tp, tp + fn
        defined = den > 0
    elif kind is MetricKind.F1:
        num, den = 2.0 * tp, 2.0 * tp + fp + fn
        defined = tp > 0
    else:
        raise ValueError(f"unknown metric {kind!r}")
    values = np.divide(num, den, out=np.zeros_like(num), where=defined)
    return values, defined


def score(c: ConfusionCounts, m: MetricKind) -> Score:
    """Evaluate one metric on one set of confusion counts."""
    values, defined = metric_values(
        np.array([c.tp]), np.array([c.fp]), np.array([c.fn_]), m
    )
    return Score(float(values[0]), bool(defined[0]))


def point_estimates(ds: "LabeledDataset") -> Mapping[str, Mapping[MetricKind, Score]]:
    """Full-dataset scores for every team and metric."""
    out: dict[str, dict[MetricKind, Score]] = {}
    for team, pred in ds.teams.items():
        c = confusion(ds.gold, pred, ds.positive)
        out[team] = {m: score(c, m) for m in ALL_METRICS}
    return out
