import itertools

import numpy as np
import pytest

import challenge_judge as cj
from challenge_judge.errors import PlanMismatch, UnknownTeam
from challenge_judge.metrics import MetricKind, confusion, score
from challenge_judge.resampling import (
    distribution,
    distributions,
    make_plan,
    paired_difference,
    replicate_counts,
)

F1, R = MetricKind.F1, MetricKind.RECALL


class TestMakePlan:
    def test_single_example_dataset(self):
        plan = make_plan(1, 3, seed=99)
        assert np.all(plan.indices == 0)

    def test_deterministic(self):
        a = make_plan(50, 200, seed=7)
        b = make_plan(50, 200, seed=7)
        assert np.array_equal(a.indices, b.indices)

    def test_seed_changes_plan(self):
        a = make_plan(50, 200, seed=7)
        b = make_plan(50, 200, seed=8)
        assert not np.array_equal(a.indices, b.indices)

    def test_rows_are_independent_streams(self):
        # any row can be regenerated in isolation from (seed, row)
        plan = make_plan(20, 30, seed=5)
        from challenge_judge.resampling import _row_indices

        for r in (0, 13, 29):
            assert np.array_equal(plan.indices[r], _row_indices(5, r, 20))

    def test_indices_in_range(self):
        plan = make_plan(7, 500, seed=1)
        assert plan.indices.min() >= 0
        assert plan.indices.max() < 7

    def test_per_position_frequencies_uniform(self):
        # binomial check: each value's frequency at each position
        # stays within 5 sigma of b/5
        n, b = 5, 100_000
        plan = make_plan(n, b, seed=3)
        sigma = np.sqrt(0.2 * 0.8 / b)
        for pos in range(n):
            freq = np.bincount(plan.indices[:, pos], minlength=n) / b
            assert np.all(np.abs(freq - 0.2) < 5 * sigma)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            make_plan(0, 10, seed=1)
        with pytest.raises(ValueError):
            make_plan(10, 0, seed=1)


class TestDistribution:
    def test_perfect_team_scores_one(self):
        gold = np.asarray(["p"] * 20 + ["n"] * 20)
        ds = cj.LabeledDataset(
            tuple(str(i) for i in range(40)), gold, {"t": gold.copy()}, "p"
        )
        plan = make_plan(40, 200, seed=0)
        d = distribution(ds, "t", F1, plan)
        assert np.all(d.values == 1.0)
        assert d.degenerate_count == 0

    def test_unknown_team(self, tiny_ds):
        plan = make_plan(3, 10, seed=0)
        with pytest.raises(UnknownTeam):
            distribution(tiny_ds, "nope", F1, plan)

    def test_plan_size_mismatch(self, tiny_ds):
        plan = make_plan(4, 10, seed=0)
        with pytest.raises(PlanMismatch):
            distribution(tiny_ds, "A", F1, plan)

    def test_recall_mean_matches_exhaustive_enumeration(self, tiny_ds):
        # brute-force oracle: all 27 equally likely resamples of n=3
        gold = list(tiny_ds.gold)
        pred = list(tiny_ds.teams["A"])
        values = []
        for combo in itertools.product(range(3), repeat=3):
            c = confusion([gold[i] for i in combo], [pred[i] for i in combo], "pos")
            values.append(score(c, R).value)
        exact_mean = float(np.mean(values))
        exact_sd = float(np.std(values))

        b = 40_000
        plan = make_plan(3, b, seed=11)
        d = distribution(tiny_ds, "A", R, plan)
        mc_sigma = exact_sd / np.sqrt(b)
        assert abs(float(d.values.mean()) - exact_mean) < 3 * mc_sigma

    def test_pairing_spot_check(self, toy_ds):
        # every team's score at replicate r comes from the same index row
        plan = make_plan(toy_ds.n, 50, seed=21)
        dists = distributions(toy_ds, plan)
        for r in (0, 17, 49):
            row = plan.indices[r]
            for team in toy_ds.teams:
                c = confusion(
                    toy_ds.gold[row], toy_ds.teams[team][row], toy_ds.positive
                )
                for m in cj.ALL_METRICS:
                    assert dists[team][m].values[r] == score(c, m).value

    def test_degenerate_count_matches_zero_denominators(self):
        # one positive in n=4: many resamples have no gold positives
        gold = np.asarray(["p", "n", "n", "n"])
        pred = np.asarray(["p", "p", "n", "n"])
        ds = cj.LabeledDataset(("1", "2", "3", "4"), gold, {"t": pred}, "p")
        plan = make_plan(4, 2000, seed=2)
        d = distribution(ds, "t", R, plan)
        no_positive = np.sum((plan.indices == 0).sum(axis=1) == 0)
        assert d.degenerate_count == no_positive
        assert d.degenerate_count > 0  # (3/4)^4 of replicates, with 2000 draws

    def test_strictly_better_team_dominates_every_replicate(self):
        rng = np.random.default_rng(8)
        gold = rng.choice(["p", "n"], size=60)
        worse = gold.copy()
        flip = rng.choice(60, size=20, replace=False)
        worse[flip] = np.where(worse[flip] == "p", "n", "p")
        better = gold.copy()
        better[flip[:8]] = worse[flip[:8]]  # errors a strict subset
        ds = cj.LabeledDataset(
            tuple(map(str, range(60))), gold, {"worse": worse, "better": better}, "p"
        )
        plan = make_plan(60, 1000, seed=4)
        dw = distribution(ds, "worse", F1, plan)
        db = distribution(ds, "better", F1, plan)
        assert np.all(db.values >= dw.values)

    def test_thread_count_does_not_change_results(self, toy_ds):
        plan = make_plan(toy_ds.n, 500, seed=13)
        serial = distributions(toy_ds, plan, threads=1)
        parallel = distributions(toy_ds, plan, threads=8)
        for team in toy_ds.teams:
            for m in cj.ALL_METRICS:
                assert np.array_equal(serial[team][m].values, parallel[team][m].values)


class TestPairedDifference:
    def test_same_team_gives_zeros(self, toy_ds):
        plan = make_plan(toy_ds.n, 100, seed=1)
        d = distribution(toy_ds, "alpha", F1, plan)
        assert np.all(paired_difference(d, d) == 0.0)

    def test_linearity_of_means(self, toy_ds):
        plan = make_plan(toy_ds.n, 500, seed=1)
        da = distribution(toy_ds, "alpha", F1, plan)
        db = distribution(toy_ds, "bravo", F1, plan)
        diff = paired_difference(da, db)
        assert diff.mean() == pytest.approx(
            da.values.mean() - db.values.mean(), abs=1e-12
        )

    def test_replicate_count_mismatch(self, toy_ds):
        da = distribution(toy_ds, "alpha", F1, make_plan(toy_ds.n, 100, seed=1))
        db = distribution(toy_ds, "bravo", F1, make_plan(toy_ds.n, 200, seed=1))
        with pytest.raises(PlanMismatch):
            paired_difference(da, db)

    def test_metric_mismatch(self, toy_ds):
        plan = make_plan(toy_ds.n, 100, seed=1)
        da = distribution(toy_ds, "alpha", F1, plan)
        db = distribution(toy_ds, "bravo", R, plan)
        with pytest.raises(PlanMismatch):
            paired_difference(da, db)

    def test_difference_mean_matches_exhaustive_enumeration(self, tiny_ds):
        gold = list(tiny_ds.gold)
        diffs_exact = []
        for combo in itertools.product(range(3), repeat=3):
            g = [gold[i] for i in combo]
            sc = {}
            for team in ("A", "B"):
                pred = [tiny_ds.teams[team][i] for i in combo]
                sc[team] = score(confusion(g, pred, "pos"), F1).value
            diffs_exact.append(sc["A"] - sc["B"])
        exact_mean = float(np.mean(diffs_exact))
        exact_sd = float(np.std(diffs_exact))

        b = 40_000
        plan = make_plan(3, b, seed=17)
        da = distribution(tiny_ds, "A", F1, plan)
        db = distribution(tiny_ds, "B", F1, plan)
        diff = paired_difference(da, db)
        assert abs(float(diff.mean()) - exact_mean) < 3 * exact_sd / np.sqrt(b)
