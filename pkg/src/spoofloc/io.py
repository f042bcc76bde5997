"""File formats: annotations, scores, manifests, and report serialization.

All formats are UTF-8 text with LF newlines and are bit-exact: parsing a
canonical file and serializing it again reproduces the same bytes, and
writers are deterministic functions of their inputs (no timestamps, no
absolute paths).

Annotation TSV, one interval per line:
    utt_id<TAB>start<TAB>end<TAB>label        label in {bonafide, fake, 0, 1}
    #duration<TAB>utt_id<TAB>seconds          explicit duration (optional)
Lines starting with '#' (other than #duration) are comments; blank lines are
ignored. When no duration line is present the duration is the maximum
interval end. Gaps between intervals are implicitly bona fide.

Score TSV, one utterance per line:
    utt_id<TAB>s1 s2 s3 ...                   space-separated finite reals

Manifest: JSON object with keys `name`, `annotations`, `scores`,
`base_resolution`, optional `subsets` (a map from subset name in
{bonafide, full, partial, both} to an utterance-id list file). Unknown keys
are rejected. Paths are resolved relative to the manifest file.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import (
    DataError,
    Interval,
    InvalidArgumentError,
    MetricsAtThreshold,
    ParseError,
    Resolution,
    ScoreSequence,
    TOOL_VERSION,
    UtteranceAnnotation,
)
from .labelize import labelize

SUBSET_NAMES = ("bonafide", "full", "partial", "both")

_LABEL_TOKENS = {"bonafide": 0, "0": 0, "fake": 1, "1": 1}


def _fmt(value: float) -> str:
    """Shortest decimal that round-trips to the same double."""
    return repr(float(value))


def sha256_file(path: str | Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as handle:
        for chunk in iter(lambda: handle.read(1 << 20), b""):
            digest.update(chunk)
    return digest.hexdigest()


# ---------------------------------------------------------------------------
# Annotation files
# ---------------------------------------------------------------------------


def parse_annotations(path: str | Path) -> list[UtteranceAnnotation]:
    """Parse an annotation TSV; returns annotations sorted by utt_id."""
    path = Path(path)
    intervals: dict[str, list[tuple[float, float, int, int]]] = {}
    durations: dict[str, tuple[float, int]] = {}
    text = path.read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#"):
            if not line.startswith("#duration\t"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise ParseError(
                    "duration line must be '#duration<TAB>utt_id<TAB>seconds'",
                    path=str(path), line=lineno,
                )
            _, utt_id, token = fields
            value = _parse_float(token, "duration", path, lineno, utt_id)
            if value < 0:
                raise ParseError("duration must be non-negative", path=str(path), line=lineno, utt_id=utt_id)
            if utt_id in durations:
                raise ParseError("duplicate duration line", path=str(path), line=lineno, utt_id=utt_id)
            durations[utt_id] = (value, lineno)
            intervals.setdefault(utt_id, [])
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise ParseError(
                "expected 'utt_id<TAB>start<TAB>end<TAB>label'",
                path=str(path), line=lineno,
            )
        utt_id, start_tok, end_tok, label_tok = fields
        if not utt_id:
            raise ParseError("empty utt_id", path=str(path), line=lineno)
        start = _parse_float(start_tok, "start", path, lineno, utt_id)
        end = _parse_float(end_tok, "end", path, lineno, utt_id)
        if label_tok not in _LABEL_TOKENS:
            raise ParseError(
                f"unknown label token {label_tok!r} (expected bonafide, fake, 0, or 1)",
                path=str(path), line=lineno, utt_id=utt_id,
            )
        if start < 0:
            raise ParseError("interval start must be >= 0", path=str(path), line=lineno, utt_id=utt_id)
        if end <= start:
            raise ParseError(
                f"interval end {end} is not after start {start} (end before start)",
                path=str(path), line=lineno, utt_id=utt_id,
            )
        intervals.setdefault(utt_id, []).append((start, end, _LABEL_TOKENS[label_tok], lineno))

    annotations = []
    for utt_id in sorted(intervals):
        spans = sorted(intervals[utt_id], key=lambda item: (item[0], item[1]))
        for (s0, e0, _l0, _n0), (s1, e1, _l1, n1) in zip(spans, spans[1:]):
            if s1 < e0:
                raise ParseError(
                    f"interval ({s1}, {e1}) overlaps previous interval ({s0}, {e0})",
                    path=str(path), line=n1, utt_id=utt_id,
                )
        max_end = max((e for _s, e, _l, _n in spans), default=0.0)
        if utt_id in durations:
            duration, dur_line = durations[utt_id]
            if max_end > duration:
                raise ParseError(
                    f"declared duration {duration} is shorter than interval end {max_end}",
                    path=str(path), line=dur_line, utt_id=utt_id,
                )
        else:
            duration = max_end
        try:
            annotations.append(
                UtteranceAnnotation(
                    utt_id, duration, tuple(Interval(s, e, l) for s, e, l, _n in spans)
                )
            )
        except InvalidArgumentError as exc:
            raise ParseError(str(exc), path=str(path), utt_id=utt_id) from exc
    return annotations


def _parse_float(token: str, what: str, path: Path, lineno: int, utt_id: str | None = None) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(
            f"{what} must be numeric, got {token!r}", path=str(path), line=lineno, utt_id=utt_id
        ) from None
    if not math.isfinite(value):
        raise ParseError(
            f"{what} must be finite, got {token!r}", path=str(path), line=lineno, utt_id=utt_id
        )
    return value


def render_annotations(annotations: list[UtteranceAnnotation]) -> str:
    """Canonical annotation text: utterances sorted by id, each with an
    explicit duration line followed by its sorted intervals."""
    lines = []
    for ann in sorted(annotations, key=lambda a: a.utt_id):
        lines.append(f"#duration\t{ann.utt_id}\t{_fmt(ann.duration)}")
        for iv in ann.intervals:
            token = "fake" if iv.label == 1 else "bonafide"
            lines.append(f"{ann.utt_id}\t{_fmt(iv.start)}\t{_fmt(iv.end)}\t{token}")
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_annotations(annotations: list[UtteranceAnnotation], path: str | Path) -> None:
    Path(path).write_text(render_annotations(annotations), encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# Score files
# ---------------------------------------------------------------------------


def parse_scores(path: str | Path, base_resolution: Resolution) -> list[ScoreSequence]:
    """Parse a score TSV; returns sequences sorted by utt_id."""
    path = Path(path)
    if not isinstance(base_resolution, Resolution):
        base_resolution = Resolution(base_resolution)
    out: dict[str, ScoreSequence] = {}
    text = path.read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ParseError("expected 'utt_id<TAB>s1 s2 ...'", path=str(path), line=lineno)
        utt_id, payload = fields
        if not utt_id:
            raise ParseError("empty utt_id", path=str(path), line=lineno)
        if utt_id in out:
            raise ParseError("duplicate utt_id", path=str(path), line=lineno, utt_id=utt_id)
        values = tuple(
            _parse_float(token, "score", path, lineno, utt_id) for token in payload.split()
        )
        out[utt_id] = ScoreSequence(utt_id, base_resolution, values)
    return [out[utt_id] for utt_id in sorted(out)]


def render_scores(scores: list[ScoreSequence]) -> str:
    """Canonical score text: utterances sorted by id, shortest round-trip
    decimals."""
    lines = []
    for seq in sorted(scores, key=lambda s: s.utt_id):
        lines.append(f"{seq.utt_id}\t{' '.join(_fmt(v) for v in seq.scores)}")
    return "\n".join(lines) + ("\n" if lines else "")


def serialize_scores(scores: list[ScoreSequence], path: str | Path) -> None:
    Path(path).write_text(render_scores(scores), encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# Alignment
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AlignedUtterance:
    utt_id: str
    labels: tuple[int, ...]
    scores: tuple[float, ...]


@dataclass(frozen=True, slots=True)
class AlignResult:
    utterances: tuple[AlignedUtterance, ...]
    warnings: tuple[str, ...]

    def pooled(self) -> tuple[np.ndarray, np.ndarray]:
        """All frames concatenated: (scores, labels) as flat arrays."""
        if not self.utterances:
            return np.empty(0, dtype=np.float64), np.empty(0, dtype=np.int8)
        scores = np.concatenate([np.asarray(u.scores, dtype=np.float64) for u in self.utterances])
        labels = np.concatenate([np.asarray(u.labels, dtype=np.int8) for u in self.utterances])
        return scores, labels


def align(
    annotations: list[UtteranceAnnotation],
    scores: list[ScoreSequence],
    resolution: Resolution,
) -> AlignResult:
    """Pair frame labels (from labelizing each annotation at `resolution`)
    with score sequences at that resolution.

    A one-frame length difference is forgiven by truncating the longer side
    (with a warning); two or more frames is a hard error. Every score
    sequence must have an annotation.
    """
    by_id = {ann.utt_id: ann for ann in annotations}
    missing = sorted({seq.utt_id for seq in scores if seq.utt_id not in by_id})
    if missing:
        raise DataError(f"score utterances without annotations: {', '.join(missing)}")
    aligned = []
    warnings: list[str] = []
    for seq in scores:
        if seq.resolution != resolution:
            raise InvalidArgumentError(
                f"{seq.utt_id}: score resolution {seq.resolution.seconds} does not "
                f"match evaluation resolution {resolution.seconds}"
            )
        labels = labelize(by_id[seq.utt_id], resolution).labels
        n_labels, n_scores = len(labels), len(seq.scores)
        if abs(n_labels - n_scores) > 1:
            raise DataError(
                f"{seq.utt_id}: frame count mismatch: {n_labels} labels vs {n_scores} scores"
            )
        if n_labels != n_scores:
            n = min(n_labels, n_scores)
            warnings.append(
                f"{seq.utt_id}: trimmed to {n} frames ({n_labels} labels vs {n_scores} scores)"
            )
            labels = labels[:n]
            values = seq.scores[:n]
        else:
            values = seq.scores
        aligned.append(AlignedUtterance(seq.utt_id, labels, values))
    return AlignResult(tuple(aligned), tuple(warnings))


# ---------------------------------------------------------------------------
# Manifests
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class DatasetManifest:
    name: str
    annotation_path: Path
    scores_path: Path
    base_resolution: Resolution
    subsets: tuple[tuple[str, Path], ...] = ()

    @property
    def input_paths(self) -> tuple[Path, ...]:
        return (self.annotation_path, self.scores_path) + tuple(p for _n, p in self.subsets)


def load_manifest(path: str | Path) -> DatasetManifest:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}", path=str(path)) from exc
    if not isinstance(raw, dict):
        raise ParseError("manifest must be a JSON object", path=str(path))
    allowed = {"name", "annotations", "scores", "base_resolution", "subsets"}
    unknown = sorted(set(raw) - allowed)
    if unknown:
        raise ParseError(f"unknown manifest keys: {', '.join(unknown)}", path=str(path))
    missing = sorted({"name", "annotations", "scores", "base_resolution"} - set(raw))
    if missing:
        raise ParseError(f"missing manifest keys: {', '.join(missing)}", path=str(path))
    if not isinstance(raw["name"], str) or not raw["name"]:
        raise ParseError("manifest name must be a non-empty string", path=str(path))
    if not isinstance(raw["base_resolution"], (int, float)) or isinstance(raw["base_resolution"], bool):
        raise ParseError("base_resolution must be a number", path=str(path))
    try:
        base = Resolution(raw["base_resolution"])
    except InvalidArgumentError as exc:
        raise ParseError(str(exc), path=str(path)) from exc
    root = path.parent
    annotation_path = root / raw["annotations"]
    scores_path = root / raw["scores"]
    subsets: list[tuple[str, Path]] = []
    raw_subsets = raw.get("subsets", {})
    if not isinstance(raw_subsets, dict):
        raise ParseError("subsets must be an object", path=str(path))
    for subset_name, rel in raw_subsets.items():
        if subset_name not in SUBSET_NAMES:
            raise ParseError(
                f"unknown subset {subset_name!r} (expected one of {', '.join(SUBSET_NAMES)})",
                path=str(path),
            )
        subsets.append((subset_name, root / rel))
    manifest = DatasetManifest(
        name=raw["name"],
        annotation_path=annotation_path,
        scores_path=scores_path,
        base_resolution=base,
        subsets=tuple(subsets),
    )
    for ref in manifest.input_paths:
        if not ref.is_file():
            raise DataError(f"{path}: referenced file does not exist: {ref}")
    return manifest


def load_subset_ids(path: str | Path) -> tuple[str, ...]:
    ids = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            ids.append(line)
    return tuple(ids)


@dataclass(frozen=True, slots=True)
class LoadedDataset:
    manifest: DatasetManifest
    annotations: tuple[UtteranceAnnotation, ...]
    scores: tuple[ScoreSequence, ...]
    subsets: tuple[tuple[str, tuple[str, ...]], ...]


def load_dataset(manifest: DatasetManifest) -> LoadedDataset:
    """Load and cross-validate everything a manifest references."""
    annotations = parse_annotations(manifest.annotation_path)
    scores = parse_scores(manifest.scores_path, manifest.base_resolution)
    known = {ann.utt_id for ann in annotations}
    subsets = []
    for subset_name, subset_path in manifest.subsets:
        ids = load_subset_ids(subset_path)
        unknown = sorted(set(ids) - known)
        if unknown:
            raise DataError(
                f"subset {subset_name!r} references unknown utterances: {', '.join(unknown[:10])}"
            )
        subsets.append((subset_name, ids))
    return LoadedDataset(manifest, tuple(annotations), tuple(scores), tuple(subsets))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RecallTargetRecord:
    target: float
    threshold: float
    metrics: MetricsAtThreshold


@dataclass(frozen=True, slots=True)
class ResolutionRow:
    """One evaluated operating regime: a segment resolution or utterance level."""

    resolution_seconds: float | None  # None marks the utterance-level row
    num_positive: int
    num_negative: int
    eer: float | None = None
    eer_threshold: float | None = None
    metrics_at_eer: MetricsAtThreshold | None = None
    fixed_threshold: float | None = None
    metrics_at_fixed: MetricsAtThreshold | None = None
    recall_target: RecallTargetRecord | None = None

    @property
    def is_utterance(self) -> bool:
        return self.resolution_seconds is None


@dataclass(frozen=True, slots=True)
class DatasetSection:
    dataset: str
    subset: str | None
    rows: tuple[ResolutionRow, ...]

    def __post_init__(self) -> None:
        segment = [r.resolution_seconds for r in self.rows if not r.is_utterance]
        if sorted(segment) != segment:
            raise InvalidArgumentError("segment rows must be listed by ascending resolution")
        utt_rows = [i for i, r in enumerate(self.rows) if r.is_utterance]
        if len(utt_rows) > 1 or (utt_rows and utt_rows[0] != len(self.rows) - 1):
            raise InvalidArgumentError("at most one utterance row, and it must come last")


@dataclass(frozen=True, slots=True)
class EvalReport:
    sections: tuple[DatasetSection, ...]
    input_digests: tuple[tuple[str, str], ...] = ()
    tool_version: str = TOOL_VERSION


REPORT_FORMATS = ("json", "tsv", "markdown")


def _f6(value: float) -> str:
    v = float(value)
    if v == 0.0:
        v = 0.0  # normalize -0.0
    return f"{v:.6f}"


def _pct(value: float | None) -> str:
    if value is None:
        return "-"
    v = float(value) * 100.0
    if v == 0.0:
        v = 0.0
    return f"{v:.2f}"


def _thr(value: float | None) -> str:
    if value is None:
        return "-"
    v = float(value)
    if v == 0.0:
        v = 0.0
    return f"{v:.4f}"


def _reso_text(row: ResolutionRow) -> str:
    if row.is_utterance:
        return "utt"
    return f"{row.resolution_seconds:g}"


class _Raw(str):
    """Pre-rendered JSON scalar."""


def _json_render(obj, indent: int = 0) -> str:
    pad = "  " * indent
    child_pad = "  " * (indent + 1)
    if isinstance(obj, _Raw):
        return str(obj)
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _f6(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=True)
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        body = ",\n".join(child_pad + _json_render(v, indent + 1) for v in obj)
        return "[\n" + body + "\n" + pad + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(
            f"{child_pad}{json.dumps(str(k), ensure_ascii=True)}: {_json_render(obj[k], indent + 1)}"
            for k in sorted(obj)
        )
        return "{\n" + body + "\n" + pad + "}"
    raise InvalidArgumentError(f"cannot render {type(obj).__name__} as JSON")


def _metrics_dict(m: MetricsAtThreshold | None) -> dict | None:
    if m is None:
        return None
    return {
        "threshold": m.threshold,
        "tp": m.tp,
        "fp": m.fp,
        "tn": m.tn,
        "fn": m.fn,
        "accuracy": m.accuracy,
        "precision": m.precision,
        "recall": m.recall,
        "f1": m.f1,
        "degenerate": list(m.degenerate),
    }


def _row_dict(row: ResolutionRow) -> dict:
    recall_block = None
    if row.recall_target is not None:
        recall_block = {
            "target": row.recall_target.target,
            "threshold": row.recall_target.threshold,
            "metrics": _metrics_dict(row.recall_target.metrics),
        }
    return {
        "level": "utterance" if row.is_utterance else "segment",
        "resolution_seconds": row.resolution_seconds,
        "num_positive": row.num_positive,
        "num_negative": row.num_negative,
        "eer": row.eer,
        "eer_threshold": row.eer_threshold,
        "metrics_at_eer": _metrics_dict(row.metrics_at_eer),
        "fixed_threshold": row.fixed_threshold,
        "metrics_at_fixed": _metrics_dict(row.metrics_at_fixed),
        "recall_target": recall_block,
    }


def _render_json(report: EvalReport) -> str:
    doc = {
        "tool_version": report.tool_version,
        "input_digests": [
            {"name": name, "sha256": digest} for name, digest in report.input_digests
        ],
        "sections": [
            {
                "dataset": section.dataset,
                "subset": section.subset,
                "rows": [_row_dict(row) for row in section.rows],
            }
            for section in report.sections
        ],
    }
    return _json_render(doc) + "\n"


_TSV_COLUMNS = (
    "dataset", "subset", "level", "resolution", "num_positive", "num_negative",
    "eer_pct", "eer_threshold",
    "eer_acc_pct", "eer_prec_pct", "eer_rec_pct", "eer_f1_pct",
    "fixed_threshold", "fixed_acc_pct", "fixed_prec_pct", "fixed_rec_pct", "fixed_f1_pct",
    "recall_target_pct", "recall_threshold", "recall_prec_pct", "recall_rec_pct", "recall_f1_pct",
)


def _render_tsv(report: EvalReport) -> str:
    lines = [f"# spoofloc {report.tool_version}"]
    for name, digest in report.input_digests:
        lines.append(f"# input\t{name}\tsha256={digest}")
    lines.append("\t".join(_TSV_COLUMNS))
    for section in report.sections:
        for row in section.rows:
            me, mf = row.metrics_at_eer, row.metrics_at_fixed
            rt = row.recall_target
            cells = [
                section.dataset,
                section.subset if section.subset is not None else "-",
                "utterance" if row.is_utterance else "segment",
                _reso_text(row),
                str(row.num_positive),
                str(row.num_negative),
                _pct(row.eer),
                _thr(row.eer_threshold),
                _pct(me.accuracy if me else None),
                _pct(me.precision if me else None),
                _pct(me.recall if me else None),
                _pct(me.f1 if me else None),
                _thr(row.fixed_threshold),
                _pct(mf.accuracy if mf else None),
                _pct(mf.precision if mf else None),
                _pct(mf.recall if mf else None),
                _pct(mf.f1 if mf else None),
                _pct(rt.target if rt else None),
                _thr(rt.threshold if rt else None),
                _pct(rt.metrics.precision if rt else None),
                _pct(rt.metrics.recall if rt else None),
                _pct(rt.metrics.f1 if rt else None),
            ]
            lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def _render_markdown(report: EvalReport) -> str:
    lines = [f"# spoofloc report (v{report.tool_version})", ""]
    if report.input_digests:
        lines.append("Inputs:")
        for name, digest in report.input_digests:
            lines.append(f"- `{name}` sha256 `{digest}`")
        lines.append("")
    for section in report.sections:
        title = section.dataset if section.subset is None else f"{section.dataset} — subset {section.subset}"
        lines.append(f"## {title}")
        lines.append("")
        has_eer = any(r.eer is not None or r.is_utterance for r in section.rows)
        has_at_eer = any(r.metrics_at_eer is not None for r in section.rows)
        fixed_rows = [r for r in section.rows if r.fixed_threshold is not None]
        has_fixed = bool(fixed_rows)
        recall_rows = [r for r in section.rows if r.recall_target is not None]
        has_recall = bool(recall_rows)
        header = ["Reso."]
        if has_eer:
            header += ["EER (%)", "EER thres."]
        if has_at_eer:
            header += ["Acc. (%)", "Pre. (%)", "Rec. (%)", "F1 (%)"]
        if has_fixed:
            t = _thr(fixed_rows[0].fixed_threshold)
            header += [f"Pre. (%) t={t}", f"Rec. (%) t={t}", f"F1 (%) t={t}"]
        if has_recall:
            pct = _pct(recall_rows[0].recall_target.target)
            header += [f"Pre. (%) R>={pct}%", f"Thres. R>={pct}%", f"F1 (%) R>={pct}%"]
        lines.append("| " + " | ".join(header) + " |")
        lines.append("|" + "|".join(" --- " for _ in header) + "|")
        for row in section.rows:
            reso = "Utt." if row.is_utterance else f"{row.resolution_seconds:g} s"
            cells = [reso]
            if has_eer:
                cells += [_pct(row.eer), _thr(row.eer_threshold)]
            if has_at_eer:
                me = row.metrics_at_eer
                cells += [
                    _pct(me.accuracy if me else None),
                    _pct(me.precision if me else None),
                    _pct(me.recall if me else None),
                    _pct(me.f1 if me else None),
                ]
            if has_fixed:
                mf = row.metrics_at_fixed
                cells += [
                    _pct(mf.precision if mf else None),
                    _pct(mf.recall if mf else None),
                    _pct(mf.f1 if mf else None),
                ]
            if has_recall:
                rt = row.recall_target
                cells += [
                    _pct(rt.metrics.precision if rt else None),
                    _thr(rt.threshold if rt else None),
                    _pct(rt.metrics.f1 if rt else None),
                ]
            lines.append("| " + " | ".join(cells) + " |")
        lines.append("")
    return "\n".join(lines)


def render_report(report: EvalReport, format: str) -> str:
    if format == "json":
        return _render_json(report)
    if format == "tsv":
        return _render_tsv(report)
    if format == "markdown":
        return _render_markdown(report)
    raise InvalidArgumentError(f"unknown report format {format!r} (expected json, tsv, or markdown)")


def write_report(report: EvalReport, format: str, path: str | Path) -> None:
    """Serialize a report; byte-identical output for identical inputs."""
    text = render_report(report, format)
    Path(path).write_text(text, encoding="utf-8", newline="\n")
