import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spoofloc import (
    Aggregator,
    FrameLabelSequence,
    InvalidArgumentError,
    Resolution,
    ScoreSequence,
    UtteranceAnnotation,
    frame_count,
    labelize,
    pool_utterance,
    resample_labels,
    resample_scores,
)

R20 = Resolution(0.02)


def ann(duration, intervals, utt_id="u"):
    return UtteranceAnnotation(utt_id, duration, tuple(intervals))


class TestLabelize:
    def test_any_fake_marks_partial_overlap(self):
        # frame [0.04, 0.06) overlaps the fake interval by 0.01 s
        assert labelize(ann(0.10, [(0.00, 0.05, 1)]), R20).labels == (1, 1, 1, 0, 0)

    def test_all_bonafide(self):
        assert labelize(ann(0.04, []), R20).labels == (0, 0)

    def test_partial_final_frame_inside_fake(self):
        assert labelize(ann(0.05, [(0.03, 0.05, 1)]), R20).labels == (0, 1, 1)

    def test_zero_duration_gives_empty_sequence(self):
        assert labelize(ann(0.0, []), R20).labels == ()

    def test_fake_ending_on_boundary_does_not_leak(self):
        # fake ends exactly at 0.04; frame [0.04, 0.06) must stay bona fide
        assert labelize(ann(0.08, [(0.0, 0.04, 1)]), R20).labels == (1, 1, 0, 0)

    def test_fake_starting_on_boundary_does_not_leak_backwards(self):
        assert labelize(ann(0.08, [(0.04, 0.08, 1)]), R20).labels == (0, 0, 1, 1)

    def test_bonafide_intervals_are_ignored(self):
        labels = labelize(ann(0.08, [(0.0, 0.04, 0), (0.04, 0.08, 1)]), R20).labels
        assert labels == (0, 0, 1, 1)

    def test_frame_count_ceils(self):
        assert frame_count(0.05, R20) == 3
        assert frame_count(0.04, R20) == 2
        assert frame_count(0.0, R20) == 0
        # exact multiples must not gain an empty tail frame
        for steps in range(1, 200):
            assert frame_count(steps * 0.02, R20) == steps

    def test_determinism(self):
        a = ann(1.234, [(0.1, 0.33, 1), (0.5, 0.9, 1)])
        assert labelize(a, R20) == labelize(a, R20)

    def test_tiny_interval_inside_one_frame(self):
        assert labelize(ann(0.06, [(0.021, 0.022, 1)]), R20).labels == (0, 1, 0)


class TestResampleScores:
    def test_group_maxima(self):
        seq = ScoreSequence("u", R20, (0.1, 0.9, 0.2, 0.3))
        out = resample_scores(seq, 2, Aggregator.MAX)
        assert out.scores == (0.9, 0.3)
        assert out.resolution == Resolution(0.04)

    def test_partial_group_of_one(self):
        assert resample_scores(ScoreSequence("u", R20, (0.5,)), 2).scores == (0.5,)

    def test_factor_three_trailing_group(self):
        seq = ScoreSequence("u", R20, (0.2, 0.4, 0.6, 0.8, 0.1))
        assert resample_scores(seq, 3).scores == (0.6, 0.8)

    def test_mean_aggregator(self):
        seq = ScoreSequence("u", R20, (0.2, 0.4, 0.9))
        out = resample_scores(seq, 2, Aggregator.MEAN)
        assert out.scores == pytest.approx((0.3, 0.9))

    def test_zero_factor_rejected(self):
        with pytest.raises(InvalidArgumentError):
            resample_scores(ScoreSequence("u", R20, (0.5,)), 0)

    def test_non_integer_factor_rejected(self):
        with pytest.raises(InvalidArgumentError):
            resample_scores(ScoreSequence("u", R20, (0.5,)), 2.0)

    def test_empty_passes_through(self):
        out = resample_scores(ScoreSequence("u", R20, ()), 4)
        assert out.scores == ()
        assert out.resolution == Resolution(0.08)

    def test_factor_one_is_identity(self):
        seq = ScoreSequence("u", R20, (0.3, 0.7))
        assert resample_scores(seq, 1) == seq

    @given(
        values=st.lists(st.floats(-5, 5, allow_nan=False), min_size=1, max_size=60),
        factor=st.integers(1, 9),
    )
    @settings(max_examples=80, deadline=None)
    def test_max_resampling_properties(self, values, factor):
        seq = ScoreSequence("u", R20, tuple(values))
        out = resample_scores(seq, factor, Aggregator.MAX)
        n = len(values)
        assert len(out.scores) == -(-n // factor)
        for i, v in enumerate(out.scores):
            group = values[i * factor : (i + 1) * factor]
            assert v == max(group)


class TestResampleLabels:
    def test_any_fake_within_group(self):
        seq = FrameLabelSequence("u", R20, (0, 1, 0, 0))
        assert resample_labels(seq, 2).labels == (1, 0)

    def test_all_bonafide_group(self):
        assert resample_labels(FrameLabelSequence("u", R20, (0, 0, 0)), 3).labels == (0,)

    def test_trailing_partial_group(self):
        assert resample_labels(FrameLabelSequence("u", R20, (1, 0, 0)), 2).labels == (1, 0)

    def test_zero_factor_rejected(self):
        with pytest.raises(InvalidArgumentError):
            resample_labels(FrameLabelSequence("u", R20, (1, 0)), 0)


class TestPoolUtterance:
    def test_max(self):
        assert pool_utterance(ScoreSequence("u", R20, (0.1, 0.7, 0.3))) == 0.7

    def test_mean(self):
        assert pool_utterance(ScoreSequence("u", R20, (0.2, 0.2)), Aggregator.MEAN) == 0.2

    def test_empty_rejected(self):
        with pytest.raises(InvalidArgumentError):
            pool_utterance(ScoreSequence("u", R20, ()))


def _random_annotation(rng, max_duration=1.0):
    duration = float(rng.uniform(0.05, max_duration))
    intervals = []
    t = 0.0
    for _ in range(int(rng.integers(0, 4))):
        gap = float(rng.uniform(0.0, duration / 4))
        length = float(rng.uniform(0.005, duration / 3))
        start = t + gap
        end = min(start + length, duration)
        if end - start > 1e-9 and start < duration:
            intervals.append((start, end, 1))
            t = end
        else:
            break
    return UtteranceAnnotation("u", duration, tuple(intervals))


class TestCommutingDiagram:
    def test_exhaustive_small_cases(self):
        # enumerate durations <= 1 s on an irregular grid for d in {0.02, 0.04}
        # and k in {2, 4, 8}: resampling fine labels must equal direct coarse
        # labelization on every group
        for d in (0.02, 0.04):
            reso = Resolution(d)
            for dur_steps in range(1, 26):
                duration = dur_steps * 0.04
                starts = np.arange(0.0, duration, 0.037)
                for start in starts:
                    end = min(float(start) + 0.055, duration)
                    intervals = [(float(start), end, 1)] if end - float(start) > 1e-9 else []
                    a = ann(duration, intervals)
                    fine = labelize(a, reso)
                    for k in (2, 4, 8):
                        assert resample_labels(fine, k).labels == labelize(a, Resolution(d * k)).labels

    def test_random_annotations(self, rng):
        for _ in range(60):
            a = _random_annotation(rng, max_duration=3.0)
            fine = labelize(a, R20)
            for k in (2, 4, 8, 16, 32):
                assert resample_labels(fine, k).labels == labelize(a, Resolution(0.02 * k)).labels

    def test_any_fake_dominance(self, rng):
        # a fake fine frame forces every coarser frame containing it to be fake
        for _ in range(40):
            a = _random_annotation(rng, max_duration=2.0)
            fine = labelize(a, R20).labels
            for k in (2, 4, 8):
                coarse = labelize(a, Resolution(0.02 * k)).labels
                for i, v in enumerate(fine):
                    if v == 1:
                        assert coarse[i // k] == 1
