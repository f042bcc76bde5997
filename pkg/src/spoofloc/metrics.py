"""Threshold sweeps over pooled frame populations.

All operations take flat score/label arrays (anything numpy can consume) so
datasets can be pooled across utterances before evaluation. The decision
rule is fixed toolkit-wide: a frame is predicted fake iff score >= threshold,
so tied scores always change side atomically.

EER convention: candidate thresholds are the midpoints between adjacent
unique scores plus one-representable-step sentinels beyond the extremes.
If some candidate attains FPR == FNR exactly, that candidate is the EER
threshold; otherwise the EER is the linear interpolation of FPR and FNR to
their crossing between the two bracketing operating points and the reported
threshold is the midpoint of the two unique scores that bracket the
crossing. The brute-force oracle in `oracle` follows the same convention by
exhaustive enumeration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .core import (
    EerResult,
    InvalidArgumentError,
    MetricUndefinedError,
    MetricsAtThreshold,
    PositiveClass,
    _as_float,
)

SINGLE_CLASS_MESSAGE = "EER undefined for single-class data"
NO_POSITIVES_MESSAGE = "recall target undefined: no positive labels"


def _as_arrays(scores, labels) -> tuple[np.ndarray, np.ndarray]:
    s = np.asarray(scores, dtype=np.float64)
    y_raw = np.asarray(labels)
    if s.ndim != 1 or y_raw.ndim != 1:
        raise InvalidArgumentError("scores and labels must be one-dimensional")
    if s.size != y_raw.size:
        raise InvalidArgumentError(
            f"length mismatch: {s.size} scores vs {y_raw.size} labels"
        )
    if s.size and not np.isfinite(s).all():
        raise InvalidArgumentError("scores must be finite (no NaN or infinity)")
    if y_raw.size and not np.isin(y_raw, (0, 1)).all():
        raise InvalidArgumentError("labels must be 0 (bona fide) or 1 (fake)")
    return s, y_raw.astype(np.int8)


def _sweep(s: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, int, int]:
    """Descending sweep over unique scores.

    Returns (unique_scores_desc, tp, fp, P, N) where tp[j]/fp[j] are the
    confusion counts of predicting fake iff score >= unique_scores_desc[j].
    Counts are read only at tie-group boundaries, so they are independent of
    both input order and within-group sort order; any deterministic sort
    therefore yields bit-identical results.
    """
    order = np.argsort(s)[::-1]
    s_sorted = s[order]
    y_sorted = y[order]
    del order
    n = s_sorted.size
    tp_cum = np.cumsum(y_sorted, dtype=np.int64)
    positions = np.arange(1, n + 1, dtype=np.int64)
    fp_cum = positions - tp_cum
    del positions, y_sorted
    p = int(tp_cum[-1])
    last_of_group = np.empty(n, dtype=bool)
    np.not_equal(s_sorted[:-1], s_sorted[1:], out=last_of_group[:-1])
    last_of_group[-1] = True
    unique = s_sorted[last_of_group]
    tp = tp_cum[last_of_group]
    fp = fp_cum[last_of_group]
    return unique, tp, fp, p, n - p


class RocPoint(NamedTuple):
    threshold: float
    fpr: float
    fnr: float
    tp: int
    fp: int
    tn: int
    fn: int


@dataclass(frozen=True, eq=False)
class RocCurve:
    """Operating points of the score >= threshold rule, thresholds descending.

    The first point is a sentinel one representable step above the maximum
    score (nothing predicted fake); the last point predicts everything fake.
    Stored column-wise so curves over tens of millions of frames stay cheap.
    """

    thresholds: np.ndarray
    tp: np.ndarray
    fp: np.ndarray
    num_positive: int
    num_negative: int

    def __post_init__(self) -> None:
        t, tp, fp = self.thresholds, self.tp, self.fp
        if not (t.ndim == tp.ndim == fp.ndim == 1) or not (t.size == tp.size == fp.size):
            raise InvalidArgumentError("ROC columns must be 1-d arrays of equal length")
        if t.size < 2:
            raise InvalidArgumentError("an ROC curve needs at least two operating points")
        if not (np.diff(t) < 0).all():
            raise InvalidArgumentError("ROC thresholds must be strictly decreasing")
        if (np.diff(tp) < 0).any() or (np.diff(fp) < 0).any():
            raise InvalidArgumentError("ROC counts must be non-decreasing as thresholds fall")
        if tp[0] != 0 or fp[0] != 0:
            raise InvalidArgumentError("first ROC point must predict nothing fake")
        if tp[-1] != self.num_positive or fp[-1] != self.num_negative:
            raise InvalidArgumentError("last ROC point must predict everything fake")
        for arr in (t, tp, fp):
            arr.setflags(write=False)

    def __len__(self) -> int:
        return int(self.thresholds.size)

    @property
    def fn(self) -> np.ndarray:
        return self.num_positive - self.tp

    @property
    def tn(self) -> np.ndarray:
        return self.num_negative - self.fp

    @property
    def fpr(self) -> np.ndarray:
        return self.fp / self.num_negative

    @property
    def fnr(self) -> np.ndarray:
        return (self.num_positive - self.tp) / self.num_positive

    def point(self, i: int) -> RocPoint:
        return RocPoint(
            threshold=float(self.thresholds[i]),
            fpr=float(self.fp[i]) / self.num_negative,
            fnr=float(self.num_positive - self.tp[i]) / self.num_positive,
            tp=int(self.tp[i]),
            fp=int(self.fp[i]),
            tn=int(self.num_negative - self.fp[i]),
            fn=int(self.num_positive - self.tp[i]),
        )


@dataclass(frozen=True, slots=True)
class Histogram:
    """Per-class score counts over uniform bins; the rightmost bin is closed."""

    bin_edges: tuple[float, ...]
    counts_bonafide: tuple[int, ...]
    counts_fake: tuple[int, ...]

    def __post_init__(self) -> None:
        edges = tuple(float(e) for e in self.bin_edges)
        object.__setattr__(self, "bin_edges", edges)
        object.__setattr__(self, "counts_bonafide", tuple(int(c) for c in self.counts_bonafide))
        object.__setattr__(self, "counts_fake", tuple(int(c) for c in self.counts_fake))
        if len(edges) < 2:
            raise InvalidArgumentError("histogram needs at least one bin")
        widths = np.diff(np.asarray(edges))
        if not (widths > 0).all():
            raise InvalidArgumentError("bin edges must be strictly ascending")
        if not np.allclose(widths, widths[0], rtol=1e-9, atol=1e-12 * max(1.0, abs(edges[-1] - edges[0]))):
            raise InvalidArgumentError("bins must have uniform width")
        nbins = len(edges) - 1
        if len(self.counts_bonafide) != nbins or len(self.counts_fake) != nbins:
            raise InvalidArgumentError("per-class counts must have one entry per bin")
        if any(c < 0 for c in self.counts_bonafide + self.counts_fake):
            raise InvalidArgumentError("counts must be non-negative")

    @property
    def num_bins(self) -> int:
        return len(self.bin_edges) - 1


def build_roc(scores: Sequence[float], labels: Sequence[int]) -> RocCurve:
    """Sort-based sweep over unique score values, both classes required."""
    s, y = _as_arrays(scores, labels)
    p = int(y.sum()) if y.size else 0
    n_neg = int(y.size) - p
    if p == 0 or n_neg == 0:
        raise MetricUndefinedError(SINGLE_CLASS_MESSAGE)
    unique, tp, fp, p, n_neg = _sweep(s, y)
    thresholds = np.concatenate(([math.nextafter(float(unique[0]), math.inf)], unique))
    tp_full = np.concatenate(([0], tp))
    fp_full = np.concatenate(([0], fp))
    return RocCurve(thresholds=thresholds, tp=tp_full, fp=fp_full, num_positive=p, num_negative=n_neg)


def compute_eer(scores: Sequence[float], labels: Sequence[int]) -> EerResult:
    """Equal error rate of the pooled scores, with its operating threshold.

    See the module docstring for the exact crossing and threshold convention.
    """
    s, y = _as_arrays(scores, labels)
    p = int(y.sum()) if y.size else 0
    n_neg = int(y.size) - p
    if p == 0 or n_neg == 0:
        raise MetricUndefinedError(SINGLE_CLASS_MESSAGE)
    unique, tp, fp, p, n_neg = _sweep(s, y)
    fpr = fp / n_neg
    fnr = (p - tp) / p
    diff = fpr - fnr  # non-decreasing; ends at +1
    j = int(np.searchsorted(diff, 0.0, side="left"))
    if diff[j] == 0.0:
        eer = float(fpr[j])
        below = float(unique[j + 1]) if j + 1 < unique.size else math.nextafter(float(unique[j]), -math.inf)
        threshold = (float(unique[j]) + below) / 2.0
    else:
        fpr_prev, fnr_prev = (float(fpr[j - 1]), float(fnr[j - 1])) if j > 0 else (0.0, 1.0)
        d_prev = fpr_prev - fnr_prev
        d_cur = float(diff[j])
        alpha = -d_prev / (d_cur - d_prev)
        eer = fpr_prev + alpha * (float(fpr[j]) - fpr_prev)
        upper = float(unique[j - 1]) if j > 0 else math.nextafter(float(unique[0]), math.inf)
        threshold = (upper + float(unique[j])) / 2.0
    eer = min(1.0, max(0.0, eer))
    return EerResult(eer=eer, threshold=threshold, num_positive=p, num_negative=n_neg)


def metrics_at_threshold(
    scores: Sequence[float],
    labels: Sequence[int],
    threshold: float,
    positive: PositiveClass = PositiveClass.FAKE,
) -> MetricsAtThreshold:
    """Confusion counts and rates at one threshold.

    Predictions never depend on `positive`: a frame is predicted fake iff
    score >= threshold. With positive=GENUINE the counts are relabeled so
    precision/recall/F1 treat genuine as the detection target; accuracy is
    unchanged.
    """
    threshold = _as_float(threshold, "threshold")
    if not math.isfinite(threshold):
        raise InvalidArgumentError("threshold must be finite")
    if not isinstance(positive, PositiveClass):
        raise InvalidArgumentError(f"positive must be a PositiveClass, got {positive!r}")
    s, y = _as_arrays(scores, labels)
    if s.size == 0:
        raise InvalidArgumentError("cannot compute metrics over zero frames")
    pred_fake = s >= threshold
    actual_fake = y.astype(bool)
    tp = int(np.count_nonzero(pred_fake & actual_fake))
    fp = int(np.count_nonzero(pred_fake & ~actual_fake))
    fn = int(np.count_nonzero(actual_fake)) - tp
    tn = int(s.size) - tp - fp - fn
    if positive is PositiveClass.GENUINE:
        tp, fp, tn, fn = tn, fn, tp, fp
    return MetricsAtThreshold.from_counts(threshold, tp, fp, tn, fn)


def threshold_at_recall(
    scores: Sequence[float],
    labels: Sequence[int],
    target_recall: float,
) -> tuple[float, MetricsAtThreshold]:
    """Largest threshold whose recall (fake positive class) meets the target.

    Candidate thresholds are midpoints between adjacent unique scores plus
    one-representable-step sentinels beyond the extremes, so reported
    thresholds are deterministic continuous values rather than raw scores.
    """
    target = _as_float(target_recall, "target recall")
    if not math.isfinite(target) or not 0.0 < target <= 1.0:
        raise InvalidArgumentError(f"target recall must lie in (0, 1], got {target_recall!r}")
    s, y = _as_arrays(scores, labels)
    p = int(y.sum()) if y.size else 0
    if p == 0:
        raise MetricUndefinedError(NO_POSITIVES_MESSAGE)
    unique, tp, fp, p, n_neg = _sweep(s, y)
    recalls = tp / p
    k = int(np.searchsorted(recalls, target, side="left"))
    if k + 1 < unique.size:
        threshold = (float(unique[k]) + float(unique[k + 1])) / 2.0
    else:
        threshold = math.nextafter(float(unique[-1]), -math.inf)
    return threshold, metrics_at_threshold(s, y, threshold, PositiveClass.FAKE)


def histogram(scores: Sequence[float], labels: Sequence[int], num_bins: int) -> Histogram:
    """Per-class histogram over uniform bins spanning [min(scores), max(scores)].

    A degenerate range (all scores identical at v) widens to [v-0.5, v+0.5].
    """
    if isinstance(num_bins, bool) or not isinstance(num_bins, (int, np.integer)) or num_bins < 1:
        raise InvalidArgumentError(f"num_bins must be a positive integer, got {num_bins!r}")
    s, y = _as_arrays(scores, labels)
    if s.size == 0:
        raise InvalidArgumentError("cannot histogram an empty score set")
    lo = float(s.min())
    hi = float(s.max())
    if lo == hi:
        lo, hi = lo - 0.5, hi + 0.5
    edges = np.linspace(lo, hi, int(num_bins) + 1)
    counts_bona, _ = np.histogram(s[y == 0], bins=edges)
    counts_fake, _ = np.histogram(s[y == 1], bins=edges)
    return Histogram(
        bin_edges=tuple(float(e) for e in edges),
        counts_bonafide=tuple(int(c) for c in counts_bona),
        counts_fake=tuple(int(c) for c in counts_fake),
    )
