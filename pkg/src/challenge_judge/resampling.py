"""Shared with-replacement index plans and bootstrap score distributions.

Every replicate row is drawn from its own counter-based stream keyed by
(seed, row), so the plan is bit-identical no matter how many workers
regenerate or consume it. All teams are evaluated on the same index rows,
which is what makes per-replicate score differences meaningful.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .dataset import LabeledDataset
from .errors import PlanMismatch, UnknownTeam
from .metrics import ALL_METRICS, MetricKind, metric_values

DEFAULT_REPLICATES = 10_000


@dataclass(frozen=True)
class ResamplePlan:
    """B rows of n with-replacement indices shared by every team."""

    n: int
    b: int
    seed: int
    indices: np.ndarray  # shape (b, n), values in [0, n)

    def __post_init__(self):
        if self.indices.shape != (self.b, self.n):
            raise PlanMismatch(
                f"index matrix has shape {self.indices.shape}, expected {(self.b, self.n)}"
            )


@dataclass(frozen=True)
class ScoreDistribution:
    """Bootstrap scores of one (team, metric), aligned by replicate index."""

    team: str
    metric: MetricKind
    values: np.ndarray  # shape (b,)
    degenerate_count: int

    @property
    def b(self) -> int:
        return len(self.values)


def _row_indices(seed: int, row: int, n: int) -> np.ndarray:
    """One replicate's index row, from the (seed, row)-keyed Philox stream."""
    gen = np.random.Generator(np.random.Philox(key=[seed, row]))
    return gen.integers(0, n, size=n, dtype=np.int32)


def make_plan(n: int, b: int, seed: int) -> ResamplePlan:
    """Generate the shared index plan for ``b`` resamples of size ``n``.

    Deterministic in (n, b, seed); rows are independent counter-based
    streams, so any subset of rows can be regenerated in isolation.
    """
    if n < 1 or b < 1:
        raise ValueError(f"need n >= 1 and b >= 1, got n={n}, b={b}")
    indices = np.empty((b, n), dtype=np.int32)
    for r in range(b):
        indices[r] = _row_indices(seed, r, n)
    return ResamplePlan(n=n, b=b, seed=seed, indices=indices)


def replicate_counts(ds: LabeledDataset, team: str, plan: ResamplePlan):
    """Per-replicate (tp, fp, fn) count arrays for one team under the plan."""
    if team not in ds.teams:
        raise UnknownTeam(f"team {team!r} not in dataset (have {list(ds.teams)})")
    if plan.n != ds.n:
        raise PlanMismatch(f"plan is for n={plan.n} but dataset has n={ds.n}")
    gold_pos = ds.gold == ds.positive
    pred_pos = ds.teams[team] == ds.positive
    # category code per example: 3=tp, 2=fn, 1=fp, 0=tn
    cat = (2 * gold_pos + pred_pos).astype(np.int8)
    c = cat[plan.indices]
    tp = (c == 3).sum(axis=1)
    fn = (c == 2).sum(axis=1)
    fp = (c == 1).sum(axis=1)
    return tp, fp, fn


def distribution(
    ds: LabeledDataset, team: str, m: MetricKind, plan: ResamplePlan
) -> ScoreDistribution:
    """Bootstrap score distribution of one (team, metric) under the plan."""
    tp, fp, fn = replicate_counts(ds, team, plan)
    values, defined = metric_values(tp, fp, fn, m)
    return ScoreDistribution(team, m, values, int(np.sum(~defined)))


def distributions(
    ds: LabeledDataset,
    plan: ResamplePlan,
    metrics: Iterable[MetricKind] = ALL_METRICS,
    threads: int | None = None,
) -> dict[str, dict[MetricKind, ScoreDistribution]]:
    """All teams' distributions for the given metrics, sharing one plan.

    ``threads`` sizes a worker pool over teams; the result is identical
    for any thread count because every replicate row is fixed by the plan.
    """
    metrics = tuple(metrics)

    def one_team(team: str) -> dict[MetricKind, ScoreDistribution]:
        tp, fp, fn = replicate_counts(ds, team, plan)
        out = {}
        for m in metrics:
            values, defined = metric_values(tp, fp, fn, m)
            out[m] = ScoreDistribution(team, m, values, int(np.sum(~defined)))
        return out

    names = list(ds.teams)
    if threads is not None and threads > 1 and len(names) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(one_team, names))
    else:
        results = [one_team(t) for t in names]
    return dict(zip(names, results))


def paired_difference(da: ScoreDistribution, db: ScoreDistribution) -> np.ndarray:
    """Element-wise score difference da - db, aligned by replicate."""
    if da.b != db.b:
        raise PlanMismatch(f"distributions have b={da.b} and b={db.b}")
    if da.metric is not db.metric:
        raise PlanMismatch(f"metric mismatch: {da.metric} vs {db.metric}")
    return da.values - db.values


def single_metric(
    dists: Mapping[str, Mapping[MetricKind, ScoreDistribution]], m: MetricKind
) -> dict[str, ScoreDistribution]:
    """Slice the nested team->metric map down to one metric."""
    return {team: by_metric[m] for team, by_metric in dists.items()}
