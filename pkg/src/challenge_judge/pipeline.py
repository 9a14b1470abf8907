"""End-to-end analysis: dataset -> full comparison report."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

import numpy as np

from .dataset import LabeledDataset
from .errors import ConfigError, UnknownTeam
from .inference import (
    ConfidenceInterval,
    DifferenceResult,
    StarMatrix,
    differences_from_best,
    ordered_intervals,
    p_value,
    rank_teams,
    star_matrix,
)
from .metrics import ALL_METRICS, MetricKind, Score, point_estimates
from .resampling import (
    DEFAULT_REPLICATES,
    make_plan,
    distributions,
    paired_difference,
    single_metric,
)

MIN_REPLICATES = 100


@dataclass(frozen=True)
class RunConfig:
    """One reproducible run: what to read, how to resample, what to write."""

    input: Path | None = None
    positive: str = "offensive"
    b: int = DEFAULT_REPLICATES
    seed: int = 42
    level: float = 0.95
    metrics: tuple[MetricKind, ...] = ALL_METRICS
    out: Path | None = None
    pairs: tuple[tuple[str, str], ...] | None = None
    threads: int | None = None

    def validate(self) -> None:
        if self.b < MIN_REPLICATES:
            raise ConfigError(f"b must be >= {MIN_REPLICATES}, got {self.b}")
        if not 0.5 <= self.level < 1.0:
            raise ConfigError(f"level must be in [0.5, 1), got {self.level}")
        if not self.metrics:
            raise ConfigError("metrics subset must be non-empty")
        if not self.positive:
            raise ConfigError("positive label must be non-empty")
        if self.threads is not None and self.threads < 1:
            raise ConfigError(f"threads must be >= 1, got {self.threads}")


@dataclass(frozen=True)
class PairAnalysis:
    """Histogram-ready paired comparison of two teams on one metric."""

    team_a: str  # higher full-dataset score
    team_b: str
    metric: MetricKind
    delta: float
    p: float
    b_exceed: int
    diffs: np.ndarray


@dataclass(frozen=True)
class MetricReport:
    metric: MetricKind
    intervals: list[tuple[str, ConfidenceInterval]]
    differences: list[DifferenceResult] = field(default_factory=list)
    stars: StarMatrix | None = None


@dataclass(frozen=True)
class ComparisonReport:
    """Everything the emitters need, in one immutable bundle.

    ``threads`` is deliberately absent: output must be byte-identical
    across worker-pool sizes, so only result-relevant settings are echoed.
    """

    b: int
    seed: int
    level: float
    positive: str
    metrics: tuple[MetricKind, ...]
    teams: tuple[str, ...]
    points: Mapping[str, Mapping[MetricKind, Score]]
    degenerate: Mapping[str, Mapping[MetricKind, int]]
    by_metric: Mapping[MetricKind, MetricReport]
    pairs: tuple[PairAnalysis, ...]


def default_pairs(points, metric: MetricKind) -> list[tuple[str, str]]:
    """Best team vs runner-up and vs third, by the given metric."""
    ranked = rank_teams({t: by_m[metric].value for t, by_m in points.items()})
    return [(ranked[0], other) for other in ranked[1:3]]


def analyze(ds: LabeledDataset, config: RunConfig) -> ComparisonReport:
    """Run the full paired-bootstrap comparison on a validated dataset."""
    config.validate()
    points = point_estimates(ds)
    plan = make_plan(ds.n, config.b, config.seed)
    dists = distributions(ds, plan, config.metrics, threads=config.threads)

    by_metric: dict[MetricKind, MetricReport] = {}
    for m in config.metrics:
        md = single_metric(dists, m)
        pts = {t: points[t][m].value for t in ds.teams}
        intervals = ordered_intervals(md, pts, config.level)
        if len(ds.teams) >= 2:
            diffs = differences_from_best(md, pts, config.level)
            stars = star_matrix(md, pts)
        else:
            diffs, stars = [], None
        by_metric[m] = MetricReport(m, intervals, diffs, stars)

    hist_metric = MetricKind.F1 if MetricKind.F1 in config.metrics else config.metrics[0]
    if config.pairs is not None:
        pair_list = list(config.pairs)
    elif len(ds.teams) >= 2:
        pair_list = default_pairs(points, hist_metric)
    else:
        pair_list = []

    pairs = []
    hm = single_metric(dists, hist_metric)
    for a, b in pair_list:
        for t in (a, b):
            if t not in ds.teams:
                raise UnknownTeam(f"pair names unknown team {t!r}")
        # orient so the full-dataset winner comes first
        if points[a][hist_metric].value < points[b][hist_metric].value:
            a, b = b, a
        delta = points[a][hist_metric].value - points[b][hist_metric].value
        d = paired_difference(hm[a], hm[b])
        pv = p_value(d, delta)
        pairs.append(PairAnalysis(a, b, hist_metric, delta, pv.p, pv.b_exceed, d))

    degenerate = {
        t: {m: dists[t][m].degenerate_count for m in config.metrics} for t in ds.teams
    }
    return ComparisonReport(
        b=config.b,
        seed=config.seed,
        level=config.level,
        positive=ds.positive,
        metrics=tuple(config.metrics),
        teams=ds.team_names,
        points=points,
        degenerate=degenerate,
        by_metric=by_metric,
        pairs=tuple(pairs),
    )
