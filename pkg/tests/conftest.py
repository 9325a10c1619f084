from pathlib import Path

import pytest
from hypothesis import strategies as st

from p4metrics import ConfusionMatrix, Label, ScoredSample, read_scored_csv

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
DEMO_CSV = FIXTURES / "scored_demo.csv"

# frozen oracle results for fixtures/scored_demo.csv (computed with
# tests/oracles.py before the library existed)
DEMO_COUNTS_AT_HALF = (49, 32, 11, 108)
DEMO_BEST = {
    "mcc-f1": (0.45, 0.330718432987827),
    "mcc-p4": (0.55, 0.2895033227029972),
}


@st.composite
def matrices(draw, max_count=10**6):
    counts = st.integers(min_value=0, max_value=max_count)
    tp, fp, fn, tn = (draw(counts) for _ in range(4))
    if tp + fp + fn + tn == 0:
        tn = 1
    return ConfusionMatrix(tp, fp, fn, tn)


@st.composite
def scored_samples(draw, min_size=1, max_size=50):
    scores = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
    labels = st.sampled_from(Label)
    pairs = st.tuples(scores, labels)
    return [ScoredSample(s, l) for s, l in draw(st.lists(pairs, min_size=min_size, max_size=max_size))]


unit_floats = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)


@pytest.fixture(scope="session")
def demo_samples():
    return read_scored_csv(DEMO_CSV)


@pytest.fixture(scope="session")
def demo_pairs(demo_samples):
    """(score, is_positive) tuples for the oracle helpers."""
    return [(s.score, s.label is Label.POSITIVE) for s in demo_samples]
