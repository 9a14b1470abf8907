import numpy as np
import pytest

import challenge_judge as cj
from challenge_judge import offendmex
from challenge_judge.pipeline import RunConfig, analyze


@pytest.fixture(scope="session")
def offendmex_ds():
    """Synthetic dataset matching every published OffendMEX confusion count."""
    return cj.reconstruct(offendmex.reconstruction_spec(), seed=7)


@pytest.fixture(scope="session")
def full_report(offendmex_ds):
    """One full b=10000 run shared by report and acceptance tests."""
    config = RunConfig(positive="offensive", b=10_000, seed=42, threads=4)
    return analyze(offendmex_ds, config)


@pytest.fixture()
def toy_ds():
    """n=4, two teams, hand-checkable metrics."""
    gold = np.asarray(["pos", "pos", "neg", "neg"])
    teams = {
        "alpha": np.asarray(["pos", "neg", "pos", "neg"]),
        "bravo": np.asarray(["pos", "pos", "pos", "neg"]),
    }
    return cj.LabeledDataset(("a", "b", "c", "d"), gold, teams, "pos")


@pytest.fixture()
def tiny_ds():
    """n=3 dataset whose 27 equally likely resamples can be enumerated."""
    gold = np.asarray(["pos", "pos", "neg"])
    teams = {
        "A": np.asarray(["pos", "neg", "neg"]),
        "B": np.asarray(["pos", "pos", "pos"]),
    }
    return cj.LabeledDataset(("x1", "x2", "x3"), gold, teams, "pos")
