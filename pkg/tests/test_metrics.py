import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spoofloc import (
    InvalidArgumentError,
    MetricUndefinedError,
    PositiveClass,
    build_roc,
    compute_eer,
    histogram,
    metrics_at_threshold,
    threshold_at_recall,
)
from spoofloc.oracle import _candidate_thresholds, _counts_at

from conftest import random_instance


class TestBuildRoc:
    def test_two_point_sweep(self):
        roc = build_roc([0.9, 0.1], [1, 0])
        assert len(roc) == 3
        assert [roc.point(i).fpr for i in range(3)] == [0.0, 0.0, 1.0]
        assert [roc.point(i).fnr for i in range(3)] == [1.0, 0.0, 0.0]
        # sentinel sits one representable step above the max score
        assert roc.point(0).threshold == math.nextafter(0.9, math.inf)

    def test_ties_move_together(self):
        roc = build_roc([0.5, 0.5], [1, 0])
        assert len(roc) == 2
        assert (roc.point(0).fpr, roc.point(0).fnr) == (0.0, 1.0)
        assert (roc.point(1).fpr, roc.point(1).fnr) == (1.0, 0.0)
        assert roc.point(1).threshold == 0.5

    def test_boundary_points(self):
        roc = build_roc([0.3, 0.8, 0.5], [0, 1, 1])
        first, last = roc.point(0), roc.point(len(roc) - 1)
        assert first.tp + first.fp == 0
        assert last.tp + last.fp == 3

    def test_thresholds_strictly_decreasing_rates_monotone(self, rng):
        for _ in range(20):
            s, y = random_instance(rng, max_size=200, ties=True)
            roc = build_roc(s, y)
            assert (np.diff(roc.thresholds) < 0).all()
            assert (np.diff(roc.fpr) >= 0).all()
            assert (np.diff(roc.fnr) <= 0).all()

    def test_length_mismatch_rejected(self):
        with pytest.raises(InvalidArgumentError):
            build_roc([0.1, 0.2], [1])

    def test_single_class_rejected(self):
        with pytest.raises(MetricUndefinedError, match="EER undefined"):
            build_roc([0.1, 0.2], [1, 1])

    def test_matches_exhaustive_counts(self, rng):
        # identical tp/fp/tn/fn at every unique threshold vs an O(M*T) recount
        for i in range(200):
            s, y = random_instance(rng, max_size=500, ties=(i % 2 == 0))
            roc = build_roc(s, y)
            fake = y.astype(bool)
            s_arr = np.asarray(s, float)
            for j in range(len(roc)):
                p = roc.point(j)
                tp, fp, tn, fn = _counts_at(s_arr, fake, p.threshold)
                assert (p.tp, p.fp, p.tn, p.fn) == (tp, fp, tn, fn)


class TestComputeEer:
    def test_perfectly_separable(self):
        r = compute_eer([0.9, 0.1], [1, 0])
        assert r.eer == 0.0
        assert r.threshold == 0.5
        assert (r.num_positive, r.num_negative) == (1, 1)

    def test_interleaved_half(self):
        r = compute_eer([0.8, 0.6, 0.4, 0.2], [1, 0, 1, 0])
        assert abs(r.eer - 0.5) <= 1e-9
        assert 0.4 < r.threshold < 0.6

    def test_perfectly_inverted(self):
        assert abs(compute_eer([0.9, 0.1], [0, 1]).eer - 1.0) <= 1e-9

    def test_all_tied_scores(self):
        assert abs(compute_eer([0.5, 0.5], [1, 0]).eer - 0.5) <= 1e-9

    def test_single_class_error(self):
        with pytest.raises(MetricUndefinedError, match="EER undefined for single-class data"):
            compute_eer([0.1, 0.9], [0, 0])

    def test_crossing_within_granularity_before_interpolation(self, rng):
        # on tie-free data the chosen operating point has |FPR-FNR| bounded by
        # the class granularity
        for _ in range(50):
            s, y = random_instance(rng, max_size=300)
            r = compute_eer(s, y)
            m = metrics_at_threshold(s, y, r.threshold)
            fpr = m.fp / (m.fp + m.tn)
            fnr = m.fn / (m.fn + m.tp)
            assert abs(fpr - fnr) <= max(1 / r.num_positive, 1 / r.num_negative) + 1e-12

    def test_accuracy_at_eer_is_one_minus_eer(self, rng):
        for _ in range(50):
            s, y = random_instance(rng, max_size=300)
            r = compute_eer(s, y)
            acc = metrics_at_threshold(s, y, r.threshold).accuracy
            assert abs(acc - (1.0 - r.eer)) <= max(1 / r.num_positive, 1 / r.num_negative)

    def test_inversion_symmetry(self, rng):
        saw_precision_gap = False
        for _ in range(60):
            s, y = random_instance(rng, max_size=300)
            r1 = compute_eer(s, y)
            r2 = compute_eer(1.0 - s, 1 - y)
            assert abs(r1.eer - r2.eer) <= 1e-9
            pf = metrics_at_threshold(s, y, r1.threshold, PositiveClass.FAKE).precision
            pg = metrics_at_threshold(s, y, r1.threshold, PositiveClass.GENUINE).precision
            if abs(pf - pg) > 0.01:
                saw_precision_gap = True
        assert saw_precision_gap, "expected at least one instance where the two framings disagree on precision"


class TestMetricsAtThreshold:
    def test_mixed_counts(self):
        m = metrics_at_threshold([0.9, 0.7, 0.3], [1, 0, 1], 0.5)
        assert (m.tp, m.fp, m.fn, m.tn) == (1, 1, 1, 0)
        assert m.accuracy == pytest.approx(1 / 3)
        assert m.precision == 0.5
        assert m.recall == 0.5
        assert m.f1 == 0.5

    def test_perfect_classifier(self):
        m = metrics_at_threshold([0.9, 0.1], [1, 0], 0.5)
        assert (m.accuracy, m.precision, m.recall, m.f1) == (1.0, 1.0, 1.0, 1.0)

    def test_genuine_positive_swaps_counts_keeps_accuracy(self):
        m = metrics_at_threshold([0.9, 0.7, 0.3], [1, 0, 1], 0.5, PositiveClass.GENUINE)
        assert (m.tp, m.fp, m.fn) == (0, 1, 1)
        assert m.precision == 0.0
        assert m.recall == 0.0
        assert m.accuracy == pytest.approx(1 / 3)

    def test_threshold_is_inclusive_for_fake(self):
        m = metrics_at_threshold([0.5], [1], 0.5)
        assert m.tp == 1

    def test_unbounded_threshold_accepted(self):
        # logit-valued thresholds outside [0, 1] are legal
        m = metrics_at_threshold([-0.01, -0.2], [1, 0], -0.0348)
        assert (m.tp, m.fp, m.tn, m.fn) == (1, 0, 1, 0)
        m = metrics_at_threshold([0.9, 1.2], [0, 1], 1.0904)
        assert (m.tp, m.fp) == (1, 0)

    def test_degenerate_flags_surface(self):
        m = metrics_at_threshold([0.1, 0.2], [0, 0], 0.9)
        assert m.degenerate == ("precision", "recall")

    def test_empty_rejected(self):
        with pytest.raises(InvalidArgumentError):
            metrics_at_threshold([], [], 0.5)

    def test_length_mismatch_rejected(self):
        with pytest.raises(InvalidArgumentError):
            metrics_at_threshold([0.5], [1, 0], 0.5)

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_counts_sum_and_f1_identity(self, data):
        m = data.draw(st.integers(1, 80))
        scores = data.draw(st.lists(st.floats(-2, 2, allow_nan=False), min_size=m, max_size=m))
        labels = data.draw(st.lists(st.integers(0, 1), min_size=m, max_size=m))
        threshold = data.draw(st.floats(-2, 2, allow_nan=False))
        out = metrics_at_threshold(scores, labels, threshold)
        assert out.total == m
        if out.precision + out.recall > 0:
            assert abs(out.f1 - 2 * out.precision * out.recall / (out.precision + out.recall)) <= 1e-12
        else:
            assert out.f1 == 0.0


class TestThresholdAtRecall:
    def test_full_recall(self):
        t, m = threshold_at_recall([0.9, 0.8, 0.2], [1, 1, 0], 1.0)
        assert t == (0.8 + 0.2) / 2
        assert m.recall == 1.0
        assert m.precision == 1.0

    def test_half_recall(self):
        t, m = threshold_at_recall([0.9, 0.8, 0.2], [1, 1, 0], 0.5)
        assert t == (0.9 + 0.8) / 2
        assert m.recall == 0.5
        assert m.precision == 1.0

    def test_no_positives_rejected(self):
        with pytest.raises(MetricUndefinedError):
            threshold_at_recall([0.4, 0.6], [0, 0], 0.9)

    @pytest.mark.parametrize("bad", [0.0, -0.5, 1.5, math.nan])
    def test_target_out_of_range_rejected(self, bad):
        with pytest.raises(InvalidArgumentError):
            threshold_at_recall([0.4, 0.6], [0, 1], bad)

    def test_achieves_target_and_is_largest(self, rng):
        # achieved recall >= target, and no candidate midpoint above the
        # returned threshold reaches the target
        for i in range(60):
            s, y = random_instance(rng, max_size=150, ties=(i % 2 == 0))
            for target in (0.9, 0.95):
                t, m = threshold_at_recall(s, y, target)
                assert m.recall >= target
                fake = y.astype(bool)
                p = int(y.sum())
                for cand in _candidate_thresholds(np.unique(np.asarray(s, float))[::-1]):
                    if cand > t:
                        tp, _fp, _tn, _fn = _counts_at(np.asarray(s, float), fake, cand)
                        assert tp / p < target


class TestHistogram:
    def test_boundary_value_falls_in_second_bin(self):
        h = histogram([0.0, 0.5, 1.0], [0, 1, 1], 2)
        assert h.bin_edges == (0.0, 0.5, 1.0)
        assert h.counts_bonafide == (1, 0)
        # half-open bins put the boundary score 0.5 in the second bin, and
        # the rightmost bin is closed, so both fakes land there
        assert h.counts_fake == (0, 2)

    def test_degenerate_range_widens(self):
        h = histogram([0.7, 0.7, 0.7], [0, 1, 0], 4)
        assert h.bin_edges[0] == pytest.approx(0.2)
        assert h.bin_edges[-1] == pytest.approx(1.2)
        assert sum(h.counts_bonafide) == 2
        assert sum(h.counts_fake) == 1

    def test_counts_sum_to_class_populations(self, rng):
        s = rng.normal(0, 1, 10_000)
        y = (rng.random(10_000) < 0.4).astype(int)
        h = histogram(s, y, 64)
        assert sum(h.counts_bonafide) == int((y == 0).sum())
        assert sum(h.counts_fake) == int((y == 1).sum())

    def test_empty_rejected(self):
        with pytest.raises(InvalidArgumentError):
            histogram([], [], 4)

    def test_bad_bins_rejected(self):
        with pytest.raises(InvalidArgumentError):
            histogram([0.1], [0], 0)
