"""Core value types shared by every other module.

Conventions used throughout the toolkit: frame label 1 marks fake audio and
0 marks bona fide audio; scores are finite reals where higher means more
likely fake (they are deliberately not clamped to [0, 1], so logit outputs
are fine); all rates are fractions in [0, 1] and percent rendering is a
presentation concern of the report writers only.

Every type validates its invariants at construction time and is immutable
afterwards, so instances are safe to share between concurrent evaluation
tasks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

TOOL_VERSION = "0.1.0"

# Resolution ladder used by default in reports; any positive duration works.
CANONICAL_RESOLUTIONS = (0.02, 0.04, 0.08, 0.16, 0.32, 0.64)


class InvalidArgumentError(ValueError):
    """An argument violates a documented precondition or type invariant."""


class DataError(ValueError):
    """Input data is structurally unusable (bad references, misaligned lengths)."""


class ParseError(DataError):
    """A file failed to parse. Carries file path, line number, and utterance id."""

    def __init__(
        self,
        message: str,
        *,
        path: str | None = None,
        line: int | None = None,
        utt_id: str | None = None,
    ) -> None:
        self.path = path
        self.line = line
        self.utt_id = utt_id
        where = ""
        if path is not None:
            where = f"{path}:" if line is None else f"{path}:{line}:"
        if utt_id is not None:
            where += f" [{utt_id}]"
        super().__init__(f"{where} {message}".strip())


class MetricUndefinedError(ValueError):
    """The requested metric has no defined value on the given data."""


def _as_float(value, what: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise InvalidArgumentError(f"{what} must be a real number, got {value!r}") from None


def _as_count(value, what: str) -> int:
    if isinstance(value, bool) or (not isinstance(value, int) and not hasattr(value, "__index__")):
        raise InvalidArgumentError(f"{what} must be a non-negative integer, got {value!r}")
    n = int(value)
    if n < 0:
        raise InvalidArgumentError(f"{what} must be a non-negative integer, got {n}")
    return n


class PositiveClass(Enum):
    """Which class precision/recall/F1 treat as the detection target.

    The toolkit default is FAKE everywhere, aligning localization with
    anomaly detection. Flipping to GENUINE keeps predictions and accuracy
    identical but generally changes precision/recall/F1.
    """

    FAKE = "fake"
    GENUINE = "genuine"


@dataclass(frozen=True, slots=True)
class Resolution:
    """Frame duration in seconds."""

    seconds: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "seconds", _as_float(self.seconds, "resolution"))
        if not math.isfinite(self.seconds) or self.seconds <= 0.0:
            raise InvalidArgumentError(
                f"resolution must be a positive finite duration in seconds, got {self.seconds!r}"
            )


@dataclass(frozen=True, slots=True)
class Interval:
    """A half-open time span [start, end) with a class label (0/1)."""

    start: float
    end: float
    label: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "start", _as_float(self.start, "interval start"))
        object.__setattr__(self, "end", _as_float(self.end, "interval end"))
        if not math.isfinite(self.start) or not math.isfinite(self.end):
            raise InvalidArgumentError("interval bounds must be finite")
        if self.start < 0.0:
            raise InvalidArgumentError(f"interval start must be >= 0, got {self.start}")
        if self.end <= self.start:
            raise InvalidArgumentError(
                f"interval end {self.end} is not after start {self.start}"
            )
        if self.label not in (0, 1):
            raise InvalidArgumentError(f"interval label must be 0 or 1, got {self.label!r}")
        object.__setattr__(self, "label", int(self.label))

    @property
    def duration(self) -> float:
        return self.end - self.start


@dataclass(frozen=True, slots=True)
class UtteranceAnnotation:
    """Ground-truth intervals for one utterance.

    Intervals must be sorted by start and non-overlapping (touching is
    allowed); gaps between them are implicitly bona fide, so files that
    only list fake spans are complete annotations.
    """

    utt_id: str
    duration: float
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.utt_id, str) or not self.utt_id:
            raise InvalidArgumentError("utt_id must be a non-empty string")
        object.__setattr__(self, "duration", _as_float(self.duration, "duration"))
        if not math.isfinite(self.duration) or self.duration < 0.0:
            raise InvalidArgumentError(
                f"duration must be a non-negative finite number, got {self.duration!r}"
            )
        items: list[Interval] = []
        for iv in self.intervals:
            items.append(iv if isinstance(iv, Interval) else Interval(*iv))
        object.__setattr__(self, "intervals", tuple(items))
        for iv in self.intervals:
            if iv.end > self.duration:
                raise InvalidArgumentError(
                    f"interval ({iv.start}, {iv.end}) of {self.utt_id} "
                    f"exceeds utterance duration {self.duration}"
                )
        for prev, cur in zip(self.intervals, self.intervals[1:]):
            if cur.start < prev.end:
                raise InvalidArgumentError(
                    f"intervals of {self.utt_id} must be sorted by start and "
                    f"non-overlapping: ({prev.start}, {prev.end}) then ({cur.start}, {cur.end})"
                )

    @property
    def fake_intervals(self) -> tuple[Interval, ...]:
        return tuple(iv for iv in self.intervals if iv.label == 1)

    @property
    def has_fake(self) -> bool:
        return any(iv.label == 1 for iv in self.intervals)


@dataclass(frozen=True, slots=True)
class FrameLabelSequence:
    """Per-frame binary labels at a fixed resolution."""

    utt_id: str
    resolution: Resolution
    labels: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.resolution, Resolution):
            raise InvalidArgumentError("resolution must be a Resolution")
        out: list[int] = []
        for v in self.labels:
            if v not in (0, 1):
                raise InvalidArgumentError(f"frame labels must be 0 or 1, got {v!r}")
            out.append(int(v))
        object.__setattr__(self, "labels", tuple(out))

    def __len__(self) -> int:
        return len(self.labels)


@dataclass(frozen=True, slots=True)
class ScoreSequence:
    """Per-frame fake scores at a fixed resolution; higher means more fake.

    Values are required to be finite but are not clamped: logit-valued
    detectors legitimately produce scores (and thresholds) outside [0, 1].
    """

    utt_id: str
    resolution: Resolution
    scores: tuple[float, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.resolution, Resolution):
            raise InvalidArgumentError("resolution must be a Resolution")
        out: list[float] = []
        for v in self.scores:
            f = _as_float(v, "score")
            if not math.isfinite(f):
                raise InvalidArgumentError(f"scores must be finite, got {v!r}")
            out.append(f)
        object.__setattr__(self, "scores", tuple(out))

    def __len__(self) -> int:
        return len(self.scores)


def _derive_rates(tp: int, fp: int, tn: int, fn: int) -> tuple[float, float, float, float, tuple[str, ...]]:
    """Derived rates for a confusion matrix; zero-denominator rates become 0.0 and are flagged."""
    total = tp + fp + tn + fn
    if total == 0:
        raise InvalidArgumentError("cannot compute metrics over zero frames")
    degenerate: list[str] = []
    accuracy = (tp + tn) / total
    if tp + fp > 0:
        precision = tp / (tp + fp)
    else:
        precision = 0.0
        degenerate.append("precision")
    if tp + fn > 0:
        recall = tp / (tp + fn)
    else:
        recall = 0.0
        degenerate.append("recall")
    f1 = 2.0 * precision * recall / (precision + recall) if precision + recall > 0.0 else 0.0
    return accuracy, precision, recall, f1, tuple(degenerate)


@dataclass(frozen=True, slots=True)
class MetricsAtThreshold:
    """Confusion counts and derived rates for one decision threshold.

    `degenerate` names the rates whose denominator was zero and were
    therefore reported as 0.0 instead of NaN, keeping reports
    machine-readable.
    """

    threshold: float
    tp: int
    fp: int
    tn: int
    fn: int
    accuracy: float
    precision: float
    recall: float
    f1: float
    degenerate: tuple[str, ...] = ()

    @classmethod
    def from_counts(cls, threshold: float, tp: int, fp: int, tn: int, fn: int) -> "MetricsAtThreshold":
        tp, fp, tn, fn = (
            _as_count(tp, "tp"),
            _as_count(fp, "fp"),
            _as_count(tn, "tn"),
            _as_count(fn, "fn"),
        )
        accuracy, precision, recall, f1, degenerate = _derive_rates(tp, fp, tn, fn)
        return cls(
            threshold=_as_float(threshold, "threshold"),
            tp=tp,
            fp=fp,
            tn=tn,
            fn=fn,
            accuracy=accuracy,
            precision=precision,
            recall=recall,
            f1=f1,
            degenerate=degenerate,
        )

    def __post_init__(self) -> None:
        object.__setattr__(self, "threshold", _as_float(self.threshold, "threshold"))
        if not math.isfinite(self.threshold):
            raise InvalidArgumentError("threshold must be finite")
        for name in ("tp", "fp", "tn", "fn"):
            object.__setattr__(self, name, _as_count(getattr(self, name), name))
        object.__setattr__(self, "degenerate", tuple(self.degenerate))
        accuracy, precision, recall, f1, degenerate = _derive_rates(self.tp, self.fp, self.tn, self.fn)
        expected = {"accuracy": accuracy, "precision": precision, "recall": recall, "f1": f1}
        for name, want in expected.items():
            got = _as_float(getattr(self, name), name)
            object.__setattr__(self, name, got)
            if got != want:
                raise InvalidArgumentError(
                    f"{name}={got!r} is inconsistent with counts "
                    f"tp={self.tp} fp={self.fp} tn={self.tn} fn={self.fn}"
                )
        if self.degenerate != degenerate:
            raise InvalidArgumentError(
                f"degenerate flags {self.degenerate!r} do not match counts "
                f"(expected {degenerate!r})"
            )

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn


@dataclass(frozen=True, slots=True)
class EerResult:
    """Equal error rate with the threshold that attains its operating point."""

    eer: float
    threshold: float
    num_positive: int
    num_negative: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "eer", _as_float(self.eer, "eer"))
        object.__setattr__(self, "threshold", _as_float(self.threshold, "threshold"))
        if not 0.0 <= self.eer <= 1.0:
            raise InvalidArgumentError(f"eer must lie in [0, 1], got {self.eer}")
        if not math.isfinite(self.threshold):
            raise InvalidArgumentError("EER threshold must be finite")
        object.__setattr__(self, "num_positive", _as_count(self.num_positive, "num_positive"))
        object.__setattr__(self, "num_negative", _as_count(self.num_negative, "num_negative"))
        if self.num_positive < 1 or self.num_negative < 1:
            raise InvalidArgumentError("EER requires at least one frame of each class")
