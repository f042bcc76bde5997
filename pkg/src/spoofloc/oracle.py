"""Brute-force reference implementations and a synthetic dataset simulator.

The brute-force functions re-derive every operating point by freshly
counting the confusion matrix at each candidate threshold (midpoints between
adjacent unique scores plus sentinels), instead of the sort-and-cumsum sweep
used by `metrics`. They share only the crossing convention, so agreement
between the two paths is a meaningful check. Inputs are capped at 10,000
frames to keep the quadratic cost in hand.

The simulator produces annotation/score pairs with the bonafide / fully-fake
/ partially-fake utterance mix of real partial-spoof corpora, class-
conditional logistic scores at a 20 ms base resolution, and per-utterance
counter-based substreams so the output is reproducible for a given seed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    EerResult,
    InvalidArgumentError,
    MetricUndefinedError,
    MetricsAtThreshold,
    Resolution,
    ScoreSequence,
    UtteranceAnnotation,
    _as_float,
)
from .labelize import labelize
from .metrics import NO_POSITIVES_MESSAGE, SINGLE_CLASS_MESSAGE, _as_arrays

BASE_RESOLUTION = Resolution(0.02)

_MAX_BRUTE_FRAMES = 10_000


def _guard_size(n: int) -> None:
    if n > _MAX_BRUTE_FRAMES:
        raise InvalidArgumentError(
            f"brute-force oracle capped at {_MAX_BRUTE_FRAMES} frames, got {n}"
        )


def _candidate_thresholds(unique_desc: np.ndarray) -> list[float]:
    """Midpoints between adjacent unique scores, plus one-representable-step
    sentinels beyond both extremes, in descending order."""
    cands = [math.nextafter(float(unique_desc[0]), math.inf)]
    for a, b in zip(unique_desc[:-1], unique_desc[1:]):
        cands.append((float(a) + float(b)) / 2.0)
    cands.append(math.nextafter(float(unique_desc[-1]), -math.inf))
    return cands


def _counts_at(s: np.ndarray, actual_fake: np.ndarray, threshold: float) -> tuple[int, int, int, int]:
    pred_fake = s >= threshold
    tp = int(np.count_nonzero(pred_fake & actual_fake))
    fp = int(np.count_nonzero(pred_fake & ~actual_fake))
    fn = int(np.count_nonzero(~pred_fake & actual_fake))
    tn = int(s.size) - tp - fp - fn
    return tp, fp, tn, fn


def brute_force_eer(scores, labels) -> EerResult:
    """Reference EER: evaluate FPR/FNR at every candidate threshold and apply
    the same crossing convention as metrics.compute_eer."""
    s, y = _as_arrays(scores, labels)
    _guard_size(s.size)
    p = int(y.sum()) if y.size else 0
    n_neg = int(y.size) - p
    if p == 0 or n_neg == 0:
        raise MetricUndefinedError(SINGLE_CLASS_MESSAGE)
    actual_fake = y.astype(bool)
    unique = np.unique(s)[::-1]
    cands = _candidate_thresholds(unique)
    rates = []
    for t in cands:
        tp, fp, tn, fn = _counts_at(s, actual_fake, t)
        rates.append((fp / n_neg, fn / p))
    j = next(i for i, (fpr, fnr) in enumerate(rates) if fpr - fnr >= 0.0)
    fpr_j, fnr_j = rates[j]
    if fpr_j - fnr_j == 0.0:
        eer = fpr_j
        threshold = cands[j]
    else:
        fpr_prev, fnr_prev = rates[j - 1]
        d_prev = fpr_prev - fnr_prev
        d_cur = fpr_j - fnr_j
        alpha = -d_prev / (d_cur - d_prev)
        eer = fpr_prev + alpha * (fpr_j - fpr_prev)
        # Candidate j sits at overall operating point j; the jump happens at
        # unique score j-1, bracketed above by unique score j-2 (or the high
        # sentinel when the crossing is at the very first real threshold).
        upper = float(unique[j - 2]) if j >= 2 else math.nextafter(float(unique[0]), math.inf)
        threshold = (upper + float(unique[j - 1])) / 2.0
    eer = min(1.0, max(0.0, eer))
    return EerResult(eer=eer, threshold=threshold, num_positive=p, num_negative=n_neg)


def brute_force_threshold_at_recall(scores, labels, target_recall) -> tuple[float, MetricsAtThreshold]:
    """Reference recall targeting by exhaustive candidate enumeration."""
    target = _as_float(target_recall, "target recall")
    if not math.isfinite(target) or not 0.0 < target <= 1.0:
        raise InvalidArgumentError(f"target recall must lie in (0, 1], got {target_recall!r}")
    s, y = _as_arrays(scores, labels)
    _guard_size(s.size)
    p = int(y.sum()) if y.size else 0
    if p == 0:
        raise MetricUndefinedError(NO_POSITIVES_MESSAGE)
    actual_fake = y.astype(bool)
    unique = np.unique(s)[::-1]
    for t in _candidate_thresholds(unique):
        tp, fp, tn, fn = _counts_at(s, actual_fake, t)
        if tp / p >= target:
            return t, MetricsAtThreshold.from_counts(t, tp, fp, tn, fn)
    raise AssertionError("unreachable: the lowest sentinel always reaches recall 1")


@dataclass(frozen=True, slots=True)
class ScoreModel:
    """Class-conditional logistic score distributions.

    Defaults put bona fide mass near 0 and fake mass near 1 with tails
    outside [0, 1], mimicking uncapped sigmoid-shaped detector outputs.
    """

    bonafide_loc: float = 0.1
    bonafide_scale: float = 0.08
    fake_loc: float = 0.9
    fake_scale: float = 0.08

    def __post_init__(self) -> None:
        for name in ("bonafide_loc", "bonafide_scale", "fake_loc", "fake_scale"):
            object.__setattr__(self, name, _as_float(getattr(self, name), name))
            if not math.isfinite(getattr(self, name)):
                raise InvalidArgumentError(f"{name} must be finite")
        if self.bonafide_scale <= 0 or self.fake_scale <= 0:
            raise InvalidArgumentError("logistic scales must be positive")


@dataclass(frozen=True, slots=True)
class SimSpec:
    """Configuration of the synthetic dataset generator."""

    num_utts: int = 100
    duration_range: tuple[float, float] = (1.0, 8.0)
    fake_ratio: float = 0.4
    mix: tuple[float, float, float] = (0.3, 0.2, 0.5)  # bonafide, full fake, partial fake
    score_model: ScoreModel = field(default_factory=ScoreModel)
    seed: int = 0

    def __post_init__(self) -> None:
        if isinstance(self.num_utts, bool) or not isinstance(self.num_utts, int) or self.num_utts < 0:
            raise InvalidArgumentError(f"num_utts must be a non-negative integer, got {self.num_utts!r}")
        lo, hi = (float(v) for v in self.duration_range)
        object.__setattr__(self, "duration_range", (lo, hi))
        if not (math.isfinite(lo) and math.isfinite(hi)) or lo <= 0 or lo > hi:
            raise InvalidArgumentError(f"duration_range must satisfy 0 < min <= max, got {self.duration_range!r}")
        object.__setattr__(self, "fake_ratio", _as_float(self.fake_ratio, "fake_ratio"))
        if not 0.0 <= self.fake_ratio <= 1.0:
            raise InvalidArgumentError(f"fake_ratio must lie in [0, 1], got {self.fake_ratio!r}")
        mix = tuple(_as_float(v, "mix probability") for v in self.mix)
        object.__setattr__(self, "mix", mix)
        if len(mix) != 3 or any(not 0.0 <= v <= 1.0 for v in mix):
            raise InvalidArgumentError(f"mix must be three probabilities in [0, 1], got {self.mix!r}")
        if abs(sum(mix) - 1.0) > 1e-9:
            raise InvalidArgumentError(f"mix probabilities must sum to 1 within 1e-9, got {sum(mix)!r}")
        if not isinstance(self.score_model, ScoreModel):
            raise InvalidArgumentError("score_model must be a ScoreModel")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise InvalidArgumentError(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


def _random_partial_intervals(rng: np.random.Generator, duration: float, fake_ratio: float) -> list[tuple[float, float, int]]:
    """1-3 non-overlapping fake intervals totalling ~fake_ratio*duration,
    separated by random bona fide gaps."""
    total_fake = fake_ratio * duration
    k = int(rng.integers(1, 4))
    parts = rng.dirichlet(np.ones(k)) * total_fake
    gaps = rng.dirichlet(np.ones(k + 1)) * (duration - total_fake)
    intervals: list[tuple[float, float, int]] = []
    t = 0.0
    for j in range(k):
        t += float(gaps[j])
        start = t
        t += float(parts[j])
        end = min(t, duration)
        if end - start > 1e-9:
            intervals.append((start, end, 1))
    if not intervals:
        raise InvalidArgumentError(
            f"fake_ratio {fake_ratio} too small to place a fake interval in {duration} s"
        )
    return intervals


def simulate(spec: SimSpec) -> tuple[list[UtteranceAnnotation], list[ScoreSequence]]:
    """Generate a synthetic dataset at the 20 ms base resolution.

    Deterministic given spec.seed: utterance i draws from the substream
    seeded with (seed, i), so utterances are independent of each other and
    of num_utts.
    """
    if not isinstance(spec, SimSpec):
        raise InvalidArgumentError("spec must be a SimSpec")
    p_bona, p_full, p_partial = spec.mix
    if p_partial > 0.0 and not 0.0 < spec.fake_ratio < 1.0:
        raise InvalidArgumentError(
            "partial-fake utterances need 0 < fake_ratio < 1 "
            f"(got {spec.fake_ratio}); use the mix for fully bona fide or fully fake data"
        )
    model = spec.score_model
    annotations: list[UtteranceAnnotation] = []
    scores: list[ScoreSequence] = []
    lo, hi = spec.duration_range
    for i in range(spec.num_utts):
        rng = np.random.default_rng((spec.seed, i))
        draw = float(rng.random())
        duration = float(rng.uniform(lo, hi))
        if draw < p_bona:
            intervals: list[tuple[float, float, int]] = []
        elif draw < p_bona + p_full:
            intervals = [(0.0, duration, 1)]
        else:
            intervals = _random_partial_intervals(rng, duration, spec.fake_ratio)
        annotation = UtteranceAnnotation(f"sim-{i:06d}", duration, tuple(intervals))
        frame_labels = np.asarray(labelize(annotation, BASE_RESOLUTION).labels, dtype=np.int8)
        locs = np.where(frame_labels == 1, model.fake_loc, model.bonafide_loc)
        scales = np.where(frame_labels == 1, model.fake_scale, model.bonafide_scale)
        values = rng.logistic(locs, scales) if frame_labels.size else np.empty(0)
        annotations.append(annotation)
        scores.append(ScoreSequence(annotation.utt_id, BASE_RESOLUTION, tuple(float(v) for v in values)))
    return annotations, scores
