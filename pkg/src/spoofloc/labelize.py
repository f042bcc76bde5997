"""Interval-to-frame labeling and cross-resolution resampling.

Frames are half-open spans [i*d, min((i+1)*d, duration)) and the frame count
is ceil(duration/d): a partial tail frame is kept rather than discarded, so
fake material at utterance ends still counts. A frame is labeled fake when
it overlaps fake material by strictly more than OVERLAP_EPS seconds, which
implements the any-fake rule while keeping intervals that end exactly on a
frame boundary (possibly with float jitter) out of the neighbouring frame.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .core import (
    FrameLabelSequence,
    InvalidArgumentError,
    Resolution,
    ScoreSequence,
    UtteranceAnnotation,
)

# Overlaps at or below this many seconds are boundary artifacts, not fakes.
OVERLAP_EPS = 1e-12
# Relative slack so durations that are exact multiples of d (up to float
# noise) do not gain a spurious empty tail frame.
_COUNT_EPS = 1e-9


class Aggregator(Enum):
    """How a group of adjacent frame scores is reduced when coarsening.

    MAX is the default everywhere; MEAN is provided for ablation.
    """

    MAX = "max"
    MEAN = "mean"


def frame_count(duration: float, resolution: Resolution) -> int:
    """Number of frames covering `duration`, keeping the partial tail frame."""
    if duration <= 0.0:
        return 0
    return max(1, math.ceil(duration / resolution.seconds - _COUNT_EPS))


def labelize(annotation: UtteranceAnnotation, resolution: Resolution) -> FrameLabelSequence:
    """Convert interval ground truth to per-frame any-fake labels.

    Frame i is 1 iff it overlaps some fake interval by more than
    OVERLAP_EPS seconds; a zero-duration utterance yields an empty sequence.
    """
    d = resolution.seconds
    n = frame_count(annotation.duration, resolution)
    labels = np.zeros(n, dtype=np.int8)

    def overlap(i: int, start: float, end: float) -> float:
        lo = i * d
        hi = min((i + 1) * d, annotation.duration)
        return min(hi, end) - max(lo, start)

    for iv in annotation.intervals:
        if iv.label != 1:
            continue
        i0 = max(0, math.floor(iv.start / d))
        i1 = min(n - 1, math.ceil(iv.end / d) - 1)
        while i0 <= i1 and overlap(i0, iv.start, iv.end) <= OVERLAP_EPS:
            i0 += 1
        while i1 >= i0 and overlap(i1, iv.start, iv.end) <= OVERLAP_EPS:
            i1 -= 1
        if i0 <= i1:
            labels[i0 : i1 + 1] = 1
    return FrameLabelSequence(annotation.utt_id, resolution, tuple(int(v) for v in labels))


def _check_factor(factor) -> int:
    if isinstance(factor, bool) or not isinstance(factor, (int, np.integer)):
        raise InvalidArgumentError(f"resampling factor must be a positive integer, got {factor!r}")
    if factor < 1:
        raise InvalidArgumentError(f"resampling factor must be >= 1, got {factor}")
    return int(factor)


def _aggregate_groups(values: np.ndarray, factor: int, agg: Aggregator) -> np.ndarray:
    """Reduce consecutive groups of `factor` values; the trailing partial
    group is reduced over its actual members rather than padded."""
    n = values.size
    n_full = (n // factor) * factor
    pieces = []
    if n_full:
        head = values[:n_full].reshape(-1, factor)
        pieces.append(head.max(axis=1) if agg is Aggregator.MAX else head.mean(axis=1))
    if n_full < n:
        tail = values[n_full:]
        pieces.append(np.asarray([tail.max() if agg is Aggregator.MAX else tail.mean()]))
    if not pieces:
        return values[:0]
    return np.concatenate(pieces)


def resample_scores(scores: ScoreSequence, factor: int, agg: Aggregator = Aggregator.MAX) -> ScoreSequence:
    """Coarsen a score sequence by an integer factor.

    The output resolution is the input resolution times `factor`; length is
    ceil(len/factor). Empty sequences pass through.
    """
    factor = _check_factor(factor)
    if not isinstance(agg, Aggregator):
        raise InvalidArgumentError(f"aggregator must be an Aggregator, got {agg!r}")
    if factor == 1:
        return scores
    values = _aggregate_groups(np.asarray(scores.scores, dtype=np.float64), factor, agg)
    return ScoreSequence(
        scores.utt_id,
        Resolution(scores.resolution.seconds * factor),
        tuple(float(v) for v in values),
    )


def resample_labels(labels: FrameLabelSequence, factor: int) -> FrameLabelSequence:
    """Coarsen frame labels by an integer factor using the any-fake rule
    (group label is the max of its members)."""
    factor = _check_factor(factor)
    if factor == 1:
        return labels
    values = _aggregate_groups(np.asarray(labels.labels, dtype=np.int8), factor, Aggregator.MAX)
    return FrameLabelSequence(
        labels.utt_id,
        Resolution(labels.resolution.seconds * factor),
        tuple(int(v) for v in values),
    )


def pool_utterance(scores: ScoreSequence, agg: Aggregator = Aggregator.MAX) -> float:
    """Reduce a whole utterance to a single score.

    The matching utterance-level label is 1 iff the annotation contains any
    fake interval (see UtteranceAnnotation.has_fake).
    """
    if not isinstance(agg, Aggregator):
        raise InvalidArgumentError(f"aggregator must be an Aggregator, got {agg!r}")
    if len(scores) == 0:
        raise InvalidArgumentError(f"cannot pool empty score sequence for {scores.utt_id!r}")
    values = np.asarray(scores.scores, dtype=np.float64)
    return float(values.max() if agg is Aggregator.MAX else values.mean())
