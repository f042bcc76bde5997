"""Command-line interface: evaluate manifests across resolutions, target
recalls, emit histograms and reports, and simulate synthetic datasets.

Exit codes: 0 success, 1 usage error, 2 data/parse error, 3 requested metric
undefined on the data (e.g. single-class EER as the sole output). Every run
logs the tool version and the sha256 of each consumed input file to stderr;
stdout (or --out) carries only the requested artifact, byte-deterministic
for identical inputs. SPOOFLOC_THREADS caps how many (dataset x resolution)
work items run concurrently; the default is serial.

Besides the evaluation workflows, three passthrough subcommands (`labelize`,
`resample`, `eval`) expose single operations on files with full-precision
output; foreign-language bindings are expected to go through these so they
never re-implement any metric logic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from .core import (
    CANONICAL_RESOLUTIONS,
    DataError,
    InvalidArgumentError,
    MetricUndefinedError,
    ParseError,
    PositiveClass,
    Resolution,
    TOOL_VERSION,
)
from .io import (
    DatasetManifest,
    DatasetSection,
    EvalReport,
    LoadedDataset,
    RecallTargetRecord,
    REPORT_FORMATS,
    ResolutionRow,
    _Raw,
    _json_render,
    align,
    load_dataset,
    load_manifest,
    parse_annotations,
    parse_scores,
    render_report,
    render_scores,
    serialize_annotations,
    serialize_scores,
    sha256_file,
)
from .labelize import Aggregator, labelize, pool_utterance, resample_scores
from .metrics import compute_eer, histogram, metrics_at_threshold, threshold_at_recall
from .oracle import BASE_RESOLUTION, ScoreModel, SimSpec, simulate

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_UNDEFINED = 3


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):  # usage errors must exit 1, not argparse's 2
        raise _UsageError(message)


def _parse_resolutions(text: str | None) -> tuple[float, ...]:
    if text is None:
        return CANONICAL_RESOLUTIONS
    try:
        values = tuple(float(token) for token in text.split(","))
    except ValueError:
        raise InvalidArgumentError(f"--resolutions must be a CSV of numbers, got {text!r}") from None
    if not values or any(v <= 0 for v in values):
        raise InvalidArgumentError(f"resolutions must be positive, got {text!r}")
    return tuple(sorted(set(values)))


def _parse_csv_floats(text: str, n: int, what: str) -> tuple[float, ...]:
    try:
        values = tuple(float(token) for token in text.split(","))
    except ValueError:
        raise InvalidArgumentError(f"{what} must be a CSV of numbers, got {text!r}") from None
    if len(values) != n:
        raise InvalidArgumentError(f"{what} expects {n} comma-separated values, got {text!r}")
    return values


def _parse_positive(token: str) -> PositiveClass:
    return PositiveClass.FAKE if token == "fake" else PositiveClass.GENUINE


def _parse_aggregate(token: str) -> Aggregator:
    return Aggregator.MAX if token == "max" else Aggregator.MEAN


def _check_target_recall(value: float) -> float:
    if not 0.0 < value <= 1.0:
        raise InvalidArgumentError(f"--target-recall must lie in (0, 1], got {value}")
    return float(value)


def _env_threads() -> int:
    raw = os.environ.get("SPOOFLOC_THREADS")
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise InvalidArgumentError(f"SPOOFLOC_THREADS must be a positive integer, got {raw!r}") from None
    if threads < 1:
        raise InvalidArgumentError(f"SPOOFLOC_THREADS must be a positive integer, got {threads}")
    return threads


def _map_ordered(fn, items):
    threads = _env_threads()
    if threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _factor_for(resolution_seconds: float, base_seconds: float) -> int:
    ratio = resolution_seconds / base_seconds
    k = round(ratio)
    if k < 1 or abs(ratio - k) > 1e-6 * max(1.0, k):
        raise InvalidArgumentError(
            f"resolution {resolution_seconds:g} is not an integer multiple of "
            f"base resolution {base_seconds:g}"
        )
    return int(k)


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _log(message: str) -> None:
    print(message, file=sys.stderr)


def _digest_entries(manifest: DatasetManifest, manifest_path: str | Path) -> list[tuple[str, str]]:
    paths = [Path(manifest_path), manifest.annotation_path, manifest.scores_path]
    paths += [p for _name, p in manifest.subsets]
    entries = []
    for p in paths:
        digest = sha256_file(p)
        entries.append((f"{manifest.name}:{p.name}", digest))
        _log(f"# input {manifest.name}:{p.name} sha256={digest}")
    return entries


def _emit_text(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _make_row(
    resolution_seconds: float | None,
    scores: np.ndarray,
    labels: np.ndarray,
    *,
    want_eer: bool,
    at_eer: bool,
    fixed_threshold: float | None,
    recall_target: float | None,
    positive: PositiveClass,
) -> ResolutionRow:
    num_positive = int(labels.sum()) if labels.size else 0
    num_negative = int(labels.size) - num_positive
    eer = eer_threshold = None
    metrics_eer = metrics_fixed = None
    recall_record = None
    if scores.size:
        if want_eer or at_eer:
            try:
                result = compute_eer(scores, labels)
                eer, eer_threshold = result.eer, result.threshold
            except MetricUndefinedError:
                pass
        if at_eer and eer_threshold is not None:
            metrics_eer = metrics_at_threshold(scores, labels, eer_threshold, positive)
        if fixed_threshold is not None:
            metrics_fixed = metrics_at_threshold(scores, labels, fixed_threshold, positive)
        if recall_target is not None:
            try:
                threshold, metrics = threshold_at_recall(scores, labels, recall_target)
                recall_record = RecallTargetRecord(recall_target, threshold, metrics)
            except MetricUndefinedError:
                pass
    return ResolutionRow(
        resolution_seconds=resolution_seconds,
        num_positive=num_positive,
        num_negative=num_negative,
        eer=eer,
        eer_threshold=eer_threshold,
        metrics_at_eer=metrics_eer,
        fixed_threshold=fixed_threshold if metrics_fixed is not None else None,
        metrics_at_fixed=metrics_fixed,
        recall_target=recall_record,
    )


def _eval_rows(
    loaded: LoadedDataset,
    subset_ids: tuple[str, ...] | None,
    resolutions: tuple[float, ...],
    *,
    include_utterance: bool,
    aggregate: Aggregator,
    want_eer: bool,
    at_eer: bool,
    fixed_threshold: float | None,
    recall_target: float | None,
    positive: PositiveClass,
) -> list[ResolutionRow]:
    annotations = list(loaded.annotations)
    scores = list(loaded.scores)
    if subset_ids is not None:
        member = set(subset_ids)
        annotations = [a for a in annotations if a.utt_id in member]
        scores = [s for s in scores if s.utt_id in member]
    base_seconds = loaded.manifest.base_resolution.seconds

    def segment_row(reso: float) -> ResolutionRow:
        factor = _factor_for(reso, base_seconds)
        effective = Resolution(base_seconds * factor)
        resampled = [resample_scores(seq, factor, aggregate) for seq in scores]
        aligned = align(annotations, resampled, effective)
        for message in aligned.warnings:
            _warn(message)
        flat_scores, flat_labels = aligned.pooled()
        return _make_row(
            effective.seconds, flat_scores, flat_labels,
            want_eer=want_eer, at_eer=at_eer, fixed_threshold=fixed_threshold,
            recall_target=recall_target, positive=positive,
        )

    rows = _map_ordered(segment_row, list(resolutions))
    if include_utterance:
        by_id = {a.utt_id: a for a in annotations}
        pooled_scores = []
        pooled_labels = []
        for seq in scores:
            if seq.utt_id not in by_id:
                raise DataError(f"score utterances without annotations: {seq.utt_id}")
            if len(seq) == 0:
                raise DataError(f"utterance {seq.utt_id} has no frames to pool")
            pooled_scores.append(pool_utterance(seq, aggregate))
            pooled_labels.append(1 if by_id[seq.utt_id].has_fake else 0)
        rows.append(
            _make_row(
                None,
                np.asarray(pooled_scores, dtype=np.float64),
                np.asarray(pooled_labels, dtype=np.int8),
                want_eer=want_eer, at_eer=at_eer, fixed_threshold=fixed_threshold,
                recall_target=recall_target, positive=positive,
            )
        )
    return rows


def _run_eval_command(
    args,
    *,
    want_eer: bool,
    at_eer: bool,
    use_fixed: bool,
    use_recall: bool,
    with_subsets: bool,
) -> tuple[EvalReport, list[ResolutionRow]]:
    resolutions = _parse_resolutions(args.resolutions)
    aggregate = _parse_aggregate(args.aggregate)
    positive = _parse_positive(args.positive)
    fixed_threshold = float(args.threshold) if use_fixed else None
    recall_target = _check_target_recall(args.target_recall) if use_recall else None
    sections = []
    digests: list[tuple[str, str]] = []
    all_rows: list[ResolutionRow] = []
    for manifest_path in args.manifest:
        manifest = load_manifest(manifest_path)
        loaded = load_dataset(manifest)
        digests.extend(_digest_entries(manifest, manifest_path))
        jobs: list[tuple[str | None, tuple[str, ...] | None]] = [(None, None)]
        if with_subsets:
            jobs += [(name, ids) for name, ids in loaded.subsets]
        for subset_name, subset_ids in jobs:
            rows = _eval_rows(
                loaded, subset_ids, resolutions,
                include_utterance=args.include_utterance, aggregate=aggregate,
                want_eer=want_eer, at_eer=at_eer, fixed_threshold=fixed_threshold,
                recall_target=recall_target, positive=positive,
            )
            sections.append(DatasetSection(manifest.name, subset_name, tuple(rows)))
            all_rows.extend(rows)
    report = EvalReport(
        sections=tuple(sections),
        input_digests=tuple(sorted(set(digests))),
    )
    return report, all_rows


def cmd_eer(args) -> int:
    report, rows = _run_eval_command(
        args, want_eer=True, at_eer=False, use_fixed=False, use_recall=False, with_subsets=False
    )
    if all(row.eer is None for row in rows):
        raise MetricUndefinedError("EER undefined for single-class data in every requested row")
    _emit_text(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_metrics(args) -> int:
    report, rows = _run_eval_command(
        args, want_eer=args.at_eer, at_eer=args.at_eer, use_fixed=True, use_recall=False,
        with_subsets=False,
    )
    if all(row.metrics_at_fixed is None and row.metrics_at_eer is None for row in rows):
        raise MetricUndefinedError("no metrics could be computed (no frames in any row)")
    _emit_text(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_recall_sweep(args) -> int:
    report, rows = _run_eval_command(
        args, want_eer=False, at_eer=False, use_fixed=False, use_recall=True, with_subsets=False
    )
    if all(row.recall_target is None for row in rows):
        raise MetricUndefinedError("recall target undefined: no positive labels in any requested row")
    _emit_text(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    report, _rows = _run_eval_command(
        args, want_eer=True, at_eer=True, use_fixed=True, use_recall=True, with_subsets=True
    )
    _emit_text(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_hist(args) -> int:
    if len(args.manifest) != 1:
        raise InvalidArgumentError("hist evaluates exactly one manifest")
    manifest = load_manifest(args.manifest[0])
    loaded = load_dataset(manifest)
    _digest_entries(manifest, args.manifest[0])
    if args.resolutions is None:
        resolutions = (manifest.base_resolution.seconds,)
    else:
        resolutions = _parse_resolutions(args.resolutions)
    if len(resolutions) != 1:
        raise InvalidArgumentError("hist takes exactly one resolution")
    aggregate = _parse_aggregate(args.aggregate)
    factor = _factor_for(resolutions[0], manifest.base_resolution.seconds)
    effective = Resolution(manifest.base_resolution.seconds * factor)
    resampled = [resample_scores(seq, factor, aggregate) for seq in loaded.scores]
    aligned = align(list(loaded.annotations), resampled, effective)
    for message in aligned.warnings:
        _warn(message)
    flat_scores, flat_labels = aligned.pooled()
    if flat_scores.size == 0:
        raise DataError("dataset has no frames to histogram")
    hist = histogram(flat_scores, flat_labels, args.bins)
    try:
        eer_threshold = repr(compute_eer(flat_scores, flat_labels).threshold)
    except MetricUndefinedError:
        eer_threshold = "-"
    lines = [
        "# spoofloc-histogram v1",
        f"# tool_version {TOOL_VERSION}",
        f"# dataset {manifest.name}",
        f"# resolution {effective.seconds:g}",
        f"# num_bonafide {sum(hist.counts_bonafide)}",
        f"# num_fake {sum(hist.counts_fake)}",
        "# threshold_neutral 0.5",
        f"# threshold_eer {eer_threshold}",
        "bin_start\tbin_end\tcount_bonafide\tcount_fake",
    ]
    for i in range(hist.num_bins):
        lines.append(
            f"{hist.bin_edges[i]!r}\t{hist.bin_edges[i + 1]!r}"
            f"\t{hist.counts_bonafide[i]}\t{hist.counts_fake[i]}"
        )
    _emit_text("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _classify_sim_utterances(annotations) -> dict[str, list[str]]:
    groups = {"bonafide": [], "full": [], "partial": []}
    for ann in annotations:
        if not ann.has_fake:
            groups["bonafide"].append(ann.utt_id)
        elif (
            len(ann.intervals) == 1
            and ann.intervals[0].label == 1
            and ann.intervals[0].start == 0.0
            and ann.intervals[0].end == ann.duration
        ):
            groups["full"].append(ann.utt_id)
        else:
            groups["partial"].append(ann.utt_id)
    return groups


def cmd_simulate(args) -> int:
    lo, hi = _parse_csv_floats(args.duration_range, 2, "--duration-range")
    mix = _parse_csv_floats(args.mix, 3, "--mix")
    model_values = _parse_csv_floats(args.score_model, 4, "--score-model")
    spec = SimSpec(
        num_utts=args.num_utts,
        duration_range=(lo, hi),
        fake_ratio=args.fake_ratio,
        mix=mix,
        score_model=ScoreModel(*model_values),
        seed=args.seed,
    )
    annotations, scores = simulate(spec)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    serialize_annotations(annotations, out_dir / "annotations.tsv")
    serialize_scores(scores, out_dir / "scores.tsv")
    groups = _classify_sim_utterances(annotations)
    all_ids = sorted(a.utt_id for a in annotations)
    subset_members = {
        "bonafide": sorted(groups["bonafide"]),
        "full": sorted(groups["bonafide"] + groups["full"]) if groups["full"] else [],
        "partial": sorted(groups["bonafide"] + groups["partial"]) if groups["partial"] else [],
        "both": all_ids,
    }
    subsets_entry = {}
    for name, ids in subset_members.items():
        if not ids:
            continue
        subset_dir = out_dir / "subsets"
        subset_dir.mkdir(exist_ok=True)
        (subset_dir / f"{name}.txt").write_text(
            "\n".join(ids) + "\n", encoding="utf-8", newline="\n"
        )
        subsets_entry[name] = f"subsets/{name}.txt"
    manifest = {
        "name": args.name,
        "annotations": "annotations.tsv",
        "scores": "scores.tsv",
        "base_resolution": BASE_RESOLUTION.seconds,
    }
    if subsets_entry:
        manifest["subsets"] = subsets_entry
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, sort_keys=True, indent=2) + "\n", encoding="utf-8", newline="\n"
    )
    _log(f"wrote {len(annotations)} utterances to {out_dir}")
    return EXIT_OK


def cmd_labelize(args) -> int:
    annotations = parse_annotations(args.annotations)
    _log(f"# input {Path(args.annotations).name} sha256={sha256_file(args.annotations)}")
    resolution = Resolution(args.resolution)
    lines = []
    for ann in annotations:
        labels = labelize(ann, resolution).labels
        lines.append(f"{ann.utt_id}\t{' '.join(str(v) for v in labels)}")
    _emit_text("\n".join(lines) + ("\n" if lines else ""), args.out)
    return EXIT_OK


def cmd_resample(args) -> int:
    sequences = parse_scores(args.scores, Resolution(args.base_resolution))
    _log(f"# input {Path(args.scores).name} sha256={sha256_file(args.scores)}")
    aggregate = _parse_aggregate(args.aggregate)
    resampled = [resample_scores(seq, args.factor, aggregate) for seq in sequences]
    _emit_text(render_scores(resampled), args.out)
    return EXIT_OK


def _flat_values(path: str, *, labels: bool) -> np.ndarray:
    sequences = parse_scores(path, BASE_RESOLUTION)
    _log(f"# input {Path(path).name} sha256={sha256_file(path)}")
    if not sequences:
        return np.empty(0, dtype=np.float64)
    flat = np.concatenate([np.asarray(seq.scores, dtype=np.float64) for seq in sequences])
    if labels:
        if flat.size and not np.isin(flat, (0.0, 1.0)).all():
            raise DataError(f"{path}: label values must all be 0 or 1")
        return flat.astype(np.int8)
    return flat


def cmd_eval(args) -> int:
    scores = _flat_values(args.scores, labels=False)
    labels = _flat_values(args.labels, labels=True)
    if args.op == "eer":
        result = compute_eer(scores, labels)
        doc = {
            "eer": _Raw(repr(result.eer)),
            "threshold": _Raw(repr(result.threshold)),
            "num_positive": result.num_positive,
            "num_negative": result.num_negative,
        }
    elif args.op == "metrics":
        metrics = metrics_at_threshold(scores, labels, args.threshold, _parse_positive(args.positive))
        doc = _full_precision_metrics(metrics)
    else:
        target = _check_target_recall(args.target_recall)
        threshold, metrics = threshold_at_recall(scores, labels, target)
        doc = {
            "target": _Raw(repr(target)),
            "threshold": _Raw(repr(threshold)),
            "metrics": _full_precision_metrics(metrics),
        }
    _emit_text(_json_render(doc) + "\n", args.out)
    return EXIT_OK


def _full_precision_metrics(metrics) -> dict:
    return {
        "threshold": _Raw(repr(metrics.threshold)),
        "tp": metrics.tp,
        "fp": metrics.fp,
        "tn": metrics.tn,
        "fn": metrics.fn,
        "accuracy": _Raw(repr(metrics.accuracy)),
        "precision": _Raw(repr(metrics.precision)),
        "recall": _Raw(repr(metrics.recall)),
        "f1": _Raw(repr(metrics.f1)),
        "degenerate": list(metrics.degenerate),
    }


def _add_eval_flags(parser: argparse.ArgumentParser, *, threshold: bool, recall: bool) -> None:
    parser.add_argument("--manifest", action="append", required=True, metavar="PATH",
                        help="dataset manifest JSON (repeatable)")
    parser.add_argument("--resolutions", metavar="CSV",
                        help="evaluation resolutions in seconds "
                             f"(default {','.join(str(r) for r in CANONICAL_RESOLUTIONS)})")
    parser.add_argument("--include-utterance", action="store_true",
                        help="append an utterance-level row (max/mean pooled scores)")
    parser.add_argument("--aggregate", choices=("max", "mean"), default="max",
                        help="score aggregation for resampling and pooling")
    parser.add_argument("--positive", choices=("fake", "genuine"), default="fake",
                        help="class treated as detection target for precision/recall/F1")
    parser.add_argument("--format", choices=REPORT_FORMATS, default="json")
    parser.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    if threshold:
        parser.add_argument("--threshold", type=float, default=0.5,
                            help="fixed decision threshold (default 0.5)")
    if recall:
        parser.add_argument("--target-recall", type=float, default=0.95,
                            help="recall level to reach (default 0.95)")


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="spoofloc",
        description="Score partially-fake speech localization as sequential anomaly detection.",
    )
    parser.add_argument("--version", action="version", version=f"spoofloc {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eer = sub.add_parser("eer", help="segment EER across resolutions")
    _add_eval_flags(p_eer, threshold=False, recall=False)
    p_eer.set_defaults(func=cmd_eer)

    p_metrics = sub.add_parser("metrics", help="accuracy/precision/recall/F1 at a threshold")
    _add_eval_flags(p_metrics, threshold=True, recall=False)
    p_metrics.add_argument("--at-eer", action="store_true",
                           help="also report metrics at the EER threshold")
    p_metrics.set_defaults(func=cmd_metrics)

    p_recall = sub.add_parser("recall-sweep", help="precision at a target recall")
    _add_eval_flags(p_recall, threshold=False, recall=True)
    p_recall.set_defaults(func=cmd_recall_sweep)

    p_report = sub.add_parser("report", help="combined EER + metrics + recall report, with subsets")
    _add_eval_flags(p_report, threshold=True, recall=True)
    p_report.set_defaults(func=cmd_report)

    p_hist = sub.add_parser("hist", help="per-class score histogram at one resolution")
    p_hist.add_argument("--manifest", action="append", required=True, metavar="PATH")
    p_hist.add_argument("--resolutions", metavar="CSV",
                        help="single evaluation resolution (default: the manifest base resolution)")
    p_hist.add_argument("--aggregate", choices=("max", "mean"), default="max")
    p_hist.add_argument("--bins", type=int, default=100, help="number of uniform bins")
    p_hist.add_argument("--out", metavar="PATH")
    p_hist.set_defaults(func=cmd_hist)

    p_sim = sub.add_parser("simulate", help="generate a synthetic dataset")
    p_sim.add_argument("--out-dir", required=True, metavar="DIR")
    p_sim.add_argument("--num-utts", type=int, default=100)
    p_sim.add_argument("--duration-range", default="1.0,8.0", metavar="MIN,MAX")
    p_sim.add_argument("--fake-ratio", type=float, default=0.4)
    p_sim.add_argument("--mix", default="0.3,0.2,0.5", metavar="BONA,FULL,PARTIAL",
                       help="utterance class probabilities (must sum to 1)")
    p_sim.add_argument("--score-model", default="0.1,0.08,0.9,0.08",
                       metavar="BONA_LOC,BONA_SCALE,FAKE_LOC,FAKE_SCALE")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--name", default="sim", help="dataset name used in the manifest")
    p_sim.set_defaults(func=cmd_simulate)

    p_lab = sub.add_parser("labelize", help="frame labels for an annotation file")
    p_lab.add_argument("--annotations", required=True, metavar="PATH")
    p_lab.add_argument("--resolution", type=float, required=True, metavar="SECONDS")
    p_lab.add_argument("--out", metavar="PATH")
    p_lab.set_defaults(func=cmd_labelize)

    p_res = sub.add_parser("resample", help="coarsen a score file by an integer factor")
    p_res.add_argument("--scores", required=True, metavar="PATH")
    p_res.add_argument("--base-resolution", type=float, default=BASE_RESOLUTION.seconds)
    p_res.add_argument("--factor", type=int, required=True)
    p_res.add_argument("--aggregate", choices=("max", "mean"), default="max")
    p_res.add_argument("--out", metavar="PATH")
    p_res.set_defaults(func=cmd_resample)

    p_eval = sub.add_parser("eval", help="single metric over flat score/label files (full precision)")
    p_eval.add_argument("--op", choices=("eer", "metrics", "recall"), required=True)
    p_eval.add_argument("--scores", required=True, metavar="PATH")
    p_eval.add_argument("--labels", required=True, metavar="PATH")
    p_eval.add_argument("--threshold", type=float, default=0.5)
    p_eval.add_argument("--positive", choices=("fake", "genuine"), default="fake")
    p_eval.add_argument("--target-recall", type=float, default=0.95)
    p_eval.add_argument("--out", metavar="PATH")
    p_eval.set_defaults(func=cmd_eval)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"spoofloc: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _log(f"spoofloc {TOOL_VERSION}")
    try:
        return args.func(args)
    except InvalidArgumentError as exc:
        print(f"spoofloc: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, DataError) as exc:
        print(f"spoofloc: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except MetricUndefinedError as exc:
        print(f"spoofloc: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except OSError as exc:
        print(f"spoofloc: i/o error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
