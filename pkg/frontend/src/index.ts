/**
 * Thin bindings for the spoofloc scoring toolkit.
 *
 * Every function delegates to the `spoofloc` CLI through its documented file
 * formats and passthrough subcommands; the wrapper contains zero metric
 * logic, so any behavioural difference from the core toolkit is a bug by
 * definition. Computation runs out of process (the JS runtime holds no lock
 * while the core works) and each call uses a private temp directory, so the
 * bound functions are reentrant. Number round-trips are lossless for finite
 * doubles: values are serialized as shortest round-trip decimals in both
 * directions.
 *
 * CLI resolution order:
 *   1. SPOOFLOC_CLI env var (whitespace-split argv prefix, e.g. "spoofloc"
 *      or "python3 -m spoofloc"),
 *   2. `python3 -m spoofloc`, with PYTHONPATH extended by a sibling `src/`
 *      checkout when present (monorepo layout).
 */

import { spawnSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

export interface Interval {
  start: number;
  end: number;
  /** 0 = bona fide, 1 = fake */
  label: 0 | 1;
}

export interface EerOutcome {
  eer: number;
  threshold: number;
  numPositive: number;
  numNegative: number;
}

export interface MetricsOutcome {
  threshold: number;
  tp: number;
  fp: number;
  tn: number;
  fn: number;
  accuracy: number;
  precision: number;
  recall: number;
  f1: number;
  /** rates whose denominator was zero and were reported as 0.0 */
  degenerate: string[];
}

export interface RecallOutcome {
  target: number;
  threshold: number;
  metrics: MetricsOutcome;
}

export type PositiveClass = "fake" | "genuine";
export type AggregatorName = "max" | "mean";

function packageRoot(): string {
  let dir = __dirname;
  for (let i = 0; i < 5; i += 1) {
    if (fs.existsSync(path.join(dir, "package.json"))) {
      return dir;
    }
    dir = path.dirname(dir);
  }
  return __dirname;
}

function cliCommand(): { argv: string[]; env: NodeJS.ProcessEnv } {
  const env: NodeJS.ProcessEnv = { ...process.env };
  const override = process.env.SPOOFLOC_CLI;
  if (override && override.trim().length > 0) {
    return { argv: override.trim().split(/\s+/), env };
  }
  const siblingSrc = path.resolve(packageRoot(), "..", "src");
  if (fs.existsSync(path.join(siblingSrc, "spoofloc", "__init__.py"))) {
    env.PYTHONPATH = env.PYTHONPATH
      ? `${siblingSrc}${path.delimiter}${env.PYTHONPATH}`
      : siblingSrc;
  }
  return { argv: ["python3", "-m", "spoofloc"], env };
}

function coreErrorMessage(stderr: string): string {
  const lines = stderr
    .split("\n")
    .map((line) => line.trim())
    .filter((line) => line.startsWith("spoofloc:"));
  if (lines.length > 0) {
    return lines[lines.length - 1].replace(/^spoofloc:\s*(?:usage error:|data error:|i\/o error:)?\s*/, "");
  }
  return stderr.trim() || "spoofloc CLI failed";
}

export function runCli(args: string[]): string {
  const { argv, env } = cliCommand();
  const proc = spawnSync(argv[0], [...argv.slice(1), ...args], {
    encoding: "utf8",
    env,
    maxBuffer: 1 << 28,
  });
  if (proc.error) {
    throw new Error(`failed to launch spoofloc CLI (${argv.join(" ")}): ${proc.error.message}`);
  }
  if (proc.status !== 0) {
    throw new Error(coreErrorMessage(proc.stderr ?? ""));
  }
  return proc.stdout ?? "";
}

/** Shortest round-trip decimal; Python's float() parses it back bit-exactly. */
function num(value: number): string {
  if (!Number.isFinite(value)) {
    // let the core reject it with its own message
    return String(value);
  }
  return String(value);
}

function withTempDir<T>(fn: (dir: string) => T): T {
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "spoofloc-bind-"));
  try {
    return fn(dir);
  } finally {
    fs.rmSync(dir, { recursive: true, force: true });
  }
}

function writeValuesFile(dir: string, name: string, values: number[]): string {
  const file = path.join(dir, name);
  fs.writeFileSync(file, `b\t${values.map(num).join(" ")}\n`, "utf8");
  return file;
}

function parseValuesFile(text: string): number[] {
  const out: number[] = [];
  for (const line of text.split("\n")) {
    if (!line.trim() || line.startsWith("#")) {
      continue;
    }
    const tab = line.indexOf("\t");
    const payload = tab >= 0 ? line.slice(tab + 1) : "";
    for (const token of payload.split(/\s+/)) {
      if (token.length > 0) {
        out.push(Number(token));
      }
    }
  }
  return out;
}

function toMetrics(raw: Record<string, unknown>): MetricsOutcome {
  return {
    threshold: raw.threshold as number,
    tp: raw.tp as number,
    fp: raw.fp as number,
    tn: raw.tn as number,
    fn: raw.fn as number,
    accuracy: raw.accuracy as number,
    precision: raw.precision as number,
    recall: raw.recall as number,
    f1: raw.f1 as number,
    degenerate: raw.degenerate as string[],
  };
}

/** Equal error rate and its operating threshold over flat score/label arrays. */
export function computeEer(scores: number[], labels: number[]): EerOutcome {
  return withTempDir((dir) => {
    const scoresFile = writeValuesFile(dir, "scores.tsv", scores);
    const labelsFile = writeValuesFile(dir, "labels.tsv", labels);
    const raw = JSON.parse(
      runCli(["eval", "--op", "eer", "--scores", scoresFile, "--labels", labelsFile])
    );
    return {
      eer: raw.eer as number,
      threshold: raw.threshold as number,
      numPositive: raw.num_positive as number,
      numNegative: raw.num_negative as number,
    };
  });
}

/** Confusion counts and rates at a fixed threshold (score >= threshold = fake). */
export function metricsAtThreshold(
  scores: number[],
  labels: number[],
  threshold: number,
  positive: PositiveClass = "fake"
): MetricsOutcome {
  return withTempDir((dir) => {
    const scoresFile = writeValuesFile(dir, "scores.tsv", scores);
    const labelsFile = writeValuesFile(dir, "labels.tsv", labels);
    const raw = JSON.parse(
      runCli([
        "eval", "--op", "metrics",
        "--scores", scoresFile,
        "--labels", labelsFile,
        `--threshold=${num(threshold)}`,
        "--positive", positive,
      ])
    );
    return toMetrics(raw);
  });
}

/** Largest threshold whose recall reaches the target, with full metrics there. */
export function thresholdAtRecall(
  scores: number[],
  labels: number[],
  targetRecall: number
): RecallOutcome {
  return withTempDir((dir) => {
    const scoresFile = writeValuesFile(dir, "scores.tsv", scores);
    const labelsFile = writeValuesFile(dir, "labels.tsv", labels);
    const raw = JSON.parse(
      runCli([
        "eval", "--op", "recall",
        "--scores", scoresFile,
        "--labels", labelsFile,
        `--target-recall=${num(targetRecall)}`,
      ])
    );
    return {
      target: raw.target as number,
      threshold: raw.threshold as number,
      metrics: toMetrics(raw.metrics as Record<string, unknown>),
    };
  });
}

/** Any-fake frame labels for one utterance's interval annotation. */
export function labelize(
  intervals: Interval[],
  durationSeconds: number,
  resolutionSeconds: number
): number[] {
  return withTempDir((dir) => {
    const lines = [`#duration\tb\t${num(durationSeconds)}`];
    for (const iv of intervals) {
      const token = iv.label === 1 ? "fake" : "bonafide";
      lines.push(`b\t${num(iv.start)}\t${num(iv.end)}\t${token}`);
    }
    const file = path.join(dir, "annotations.tsv");
    fs.writeFileSync(file, lines.join("\n") + "\n", "utf8");
    const out = runCli([
      "labelize", "--annotations", file, `--resolution=${num(resolutionSeconds)}`,
    ]);
    return parseValuesFile(out);
  });
}

/** Coarsen a frame sequence by an integer factor (max or mean per group). */
export function resample(
  values: number[],
  factor: number,
  aggregator: AggregatorName = "max",
  baseResolutionSeconds = 0.02
): number[] {
  return withTempDir((dir) => {
    const file = writeValuesFile(dir, "scores.tsv", values);
    const out = runCli([
      "resample",
      "--scores", file,
      "--factor", String(factor),
      "--aggregate", aggregator,
      `--base-resolution=${num(baseResolutionSeconds)}`,
    ]);
    return parseValuesFile(out);
  });
}

/** Core tool version; the bindings package version matches it. */
export function version(): string {
  const out = runCli(["--version"]).trim();
  return out.replace(/^spoofloc\s+/, "");
}
