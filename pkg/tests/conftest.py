import numpy as np
import pytest


def random_instance(rng, max_size=500, ties=False, min_size=2):
    """Random (scores, labels) with both classes present."""
    m = int(rng.integers(min_size, max_size + 1))
    scores = rng.uniform(-1.0, 2.0, m)
    if ties:
        scores = np.round(scores, 2)
    labels = (rng.random(m) < rng.uniform(0.2, 0.8)).astype(np.int8)
    if labels.sum() == 0:
        labels[0] = 1
    if labels.sum() == m:
        labels[0] = 0
    return scores, labels


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
