"""Scoring toolkit for partially fake speech localization.

Evaluates frame-level fake/bona-fide score sequences as a sequential anomaly
detection task: interval ground truth becomes per-frame any-fake labels,
scores are pooled dataset-wide and swept at multiple temporal resolutions,
and both threshold-independent (EER) and threshold-dependent
(accuracy/precision/recall/F1, precision-at-recall) metrics are reported.
Brute-force oracles and a deterministic simulator back the whole pipeline
for verification.
"""

from .core import (
    CANONICAL_RESOLUTIONS,
    DataError,
    EerResult,
    Interval,
    InvalidArgumentError,
    MetricUndefinedError,
    MetricsAtThreshold,
    ParseError,
    PositiveClass,
    Resolution,
    ScoreSequence,
    FrameLabelSequence,
    TOOL_VERSION,
    UtteranceAnnotation,
)
from .labelize import (
    Aggregator,
    OVERLAP_EPS,
    frame_count,
    labelize,
    pool_utterance,
    resample_labels,
    resample_scores,
)
from .metrics import (
    Histogram,
    RocCurve,
    RocPoint,
    build_roc,
    compute_eer,
    histogram,
    metrics_at_threshold,
    threshold_at_recall,
)
from .oracle import (
    BASE_RESOLUTION,
    ScoreModel,
    SimSpec,
    brute_force_eer,
    brute_force_threshold_at_recall,
    simulate,
)
from .io import (
    AlignResult,
    AlignedUtterance,
    DatasetManifest,
    DatasetSection,
    EvalReport,
    LoadedDataset,
    RecallTargetRecord,
    ResolutionRow,
    align,
    load_dataset,
    load_manifest,
    load_subset_ids,
    parse_annotations,
    parse_scores,
    render_report,
    serialize_annotations,
    serialize_scores,
    sha256_file,
    write_report,
)

__version__ = TOOL_VERSION

__all__ = [
    "Aggregator",
    "AlignResult",
    "AlignedUtterance",
    "BASE_RESOLUTION",
    "CANONICAL_RESOLUTIONS",
    "DataError",
    "DatasetManifest",
    "DatasetSection",
    "EerResult",
    "EvalReport",
    "FrameLabelSequence",
    "Histogram",
    "Interval",
    "InvalidArgumentError",
    "LoadedDataset",
    "MetricUndefinedError",
    "MetricsAtThreshold",
    "OVERLAP_EPS",
    "ParseError",
    "PositiveClass",
    "RecallTargetRecord",
    "Resolution",
    "ResolutionRow",
    "RocCurve",
    "RocPoint",
    "ScoreModel",
    "ScoreSequence",
    "SimSpec",
    "TOOL_VERSION",
    "UtteranceAnnotation",
    "align",
    "brute_force_eer",
    "brute_force_threshold_at_recall",
    "build_roc",
    "compute_eer",
    "frame_count",
    "histogram",
    "labelize",
    "load_dataset",
    "load_manifest",
    "load_subset_ids",
    "metrics_at_threshold",
    "parse_annotations",
    "parse_scores",
    "pool_utterance",
    "render_report",
    "resample_labels",
    "resample_scores",
    "serialize_annotations",
    "serialize_scores",
    "sha256_file",
    "simulate",
    "threshold_at_recall",
    "write_report",
]
