import assert from "node:assert/strict";
import { test } from "node:test";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import {
  computeEer,
  labelize,
  metricsAtThreshold,
  resample,
  runCli,
  thresholdAtRecall,
  version,
} from "../src/index";

/** Deterministic 32-bit PRNG so the parity corpus is reproducible. */
function mulberry32(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

function randomInstance(rand: () => number): { scores: number[]; labels: number[] } {
  const m = 5 + Math.floor(rand() * 46);
  const scores: number[] = [];
  const labels: number[] = [];
  for (let i = 0; i < m; i += 1) {
    scores.push(rand() * 3 - 1);
    labels.push(rand() < 0.5 ? 0 : 1);
  }
  if (!labels.includes(1)) labels[0] = 1;
  if (!labels.includes(0)) labels[0] = 0;
  return { scores, labels };
}

function writeInstance(dir: string, scores: number[], labels: number[]): { s: string; y: string } {
  const s = path.join(dir, "scores.tsv");
  const y = path.join(dir, "labels.tsv");
  fs.writeFileSync(s, `b\t${scores.map(String).join(" ")}\n`, "utf8");
  fs.writeFileSync(y, `b\t${labels.map(String).join(" ")}\n`, "utf8");
  return { s, y };
}

test("computeEer mirrors the core separable example", () => {
  const out = computeEer([0.9, 0.1], [1, 0]);
  assert.deepEqual(out, { eer: 0.0, threshold: 0.5, numPositive: 1, numNegative: 1 });
});

test("computeEer mirrors the interleaved example", () => {
  const out = computeEer([0.8, 0.6, 0.4, 0.2], [1, 0, 1, 0]);
  assert.ok(Math.abs(out.eer - 0.5) <= 1e-9);
});

test("computeEer rejects single-class input with the core message", () => {
  assert.throws(
    () => computeEer([0.4, 0.6], [1, 1]),
    /EER undefined for single-class data/
  );
});

test("metricsAtThreshold mirrors the core examples bit-for-bit", () => {
  const mixed = metricsAtThreshold([0.9, 0.7, 0.3], [1, 0, 1], 0.5);
  assert.equal(mixed.tp, 1);
  assert.equal(mixed.fp, 1);
  assert.equal(mixed.fn, 1);
  assert.equal(mixed.tn, 0);
  assert.ok(Object.is(mixed.accuracy, 1 / 3)); // exact double, not a rounding
  assert.equal(mixed.precision, 0.5);
  assert.equal(mixed.recall, 0.5);
  assert.equal(mixed.f1, 0.5);

  const perfect = metricsAtThreshold([0.9, 0.1], [1, 0], 0.5);
  assert.equal(perfect.accuracy, 1.0);
  assert.equal(perfect.f1, 1.0);

  const genuine = metricsAtThreshold([0.9, 0.7, 0.3], [1, 0, 1], 0.5, "genuine");
  assert.equal(genuine.tp, 0);
  assert.equal(genuine.fp, 1);
  assert.equal(genuine.fn, 1);
  assert.equal(genuine.precision, 0.0);
  assert.equal(genuine.recall, 0.0);
  assert.ok(Object.is(genuine.accuracy, 1 / 3));
});

test("metricsAtThreshold rejects empty arrays", () => {
  assert.throws(() => metricsAtThreshold([], [], 0.5), /zero frames/);
});

test("thresholdAtRecall mirrors the core examples", () => {
  const full = thresholdAtRecall([0.9, 0.8, 0.2], [1, 1, 0], 1.0);
  assert.equal(full.threshold, (0.8 + 0.2) / 2);
  assert.equal(full.metrics.recall, 1.0);
  assert.equal(full.metrics.precision, 1.0);

  const half = thresholdAtRecall([0.9, 0.8, 0.2], [1, 1, 0], 0.5);
  assert.equal(half.threshold, (0.9 + 0.8) / 2);
  assert.equal(half.metrics.recall, 0.5);
});

test("thresholdAtRecall rejects all-negative labels", () => {
  assert.throws(() => thresholdAtRecall([0.4, 0.6], [0, 0], 0.9), /no positive labels/);
});

test("labelize applies the any-fake rule", () => {
  assert.deepEqual(labelize([{ start: 0.0, end: 0.05, label: 1 }], 0.1, 0.02), [1, 1, 1, 0, 0]);
  assert.deepEqual(labelize([], 0.04, 0.02), [0, 0]);
  assert.deepEqual(labelize([{ start: 0.03, end: 0.05, label: 1 }], 0.05, 0.02), [0, 1, 1]);
  // a fake ending exactly on a frame boundary must not leak into the next frame
  assert.deepEqual(labelize([{ start: 0.0, end: 0.04, label: 1 }], 0.08, 0.02), [1, 1, 0, 0]);
});

test("labelize surfaces core validation errors", () => {
  assert.throws(() => labelize([{ start: 0.6, end: 0.4, label: 1 }], 1.0, 0.02), /end/);
});

test("resample reduces groups with max by default and mean on request", () => {
  assert.deepEqual(resample([0.1, 0.9, 0.2, 0.3], 2), [0.9, 0.3]);
  assert.deepEqual(resample([0.5], 2), [0.5]);
  assert.deepEqual(resample([0.2, 0.4, 0.6, 0.8, 0.1], 3), [0.6, 0.8]);
  assert.deepEqual(resample([0.25, 0.75], 2, "mean"), [0.5]);
});

test("resample rejects factor zero", () => {
  assert.throws(() => resample([0.5], 0), /factor/);
});

test("version matches the core tool version", () => {
  assert.equal(version(), "0.1.0");
});

test("large arrays round-trip without value change", () => {
  const rand = mulberry32(424242);
  const values: number[] = [];
  for (let i = 0; i < 50_000; i += 1) {
    values.push(rand() * 2 - 0.5);
  }
  const labels = values.map((_v, i) => (i % 3 === 0 ? 1 : 0));
  const out = metricsAtThreshold(values, labels, 0.5);
  assert.equal(out.tp + out.fp + out.tn + out.fn, values.length);
  const echoed = resample(values, 1);
  assert.equal(echoed.length, values.length);
  for (let i = 0; i < values.length; i += 1) {
    if (!Object.is(echoed[i], values[i])) {
      assert.fail(`value changed at ${i}: ${values[i]} -> ${echoed[i]}`);
    }
  }
});

test("binding parity: eer and metrics match direct CLI runs bit-for-bit on 100 shared instances", () => {
  const rand = mulberry32(1337);
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "spoofloc-parity-"));
  try {
    for (let i = 0; i < 100; i += 1) {
      const { scores, labels } = randomInstance(rand);
      const { s, y } = writeInstance(dir, scores, labels);

      const directEer = JSON.parse(
        runCli(["eval", "--op", "eer", "--scores", s, "--labels", y])
      );
      const boundEer = computeEer(scores, labels);
      assert.ok(Object.is(boundEer.eer, directEer.eer), `eer mismatch at instance ${i}`);
      assert.ok(Object.is(boundEer.threshold, directEer.threshold), `threshold mismatch at ${i}`);
      assert.equal(boundEer.numPositive, directEer.num_positive);
      assert.equal(boundEer.numNegative, directEer.num_negative);

      const directMetrics = JSON.parse(
        runCli(["eval", "--op", "metrics", "--scores", s, "--labels", y, "--threshold=0.5"])
      );
      const boundMetrics = metricsAtThreshold(scores, labels, 0.5);
      for (const key of ["tp", "fp", "tn", "fn"] as const) {
        assert.equal(boundMetrics[key], directMetrics[key], `${key} mismatch at ${i}`);
      }
      for (const key of ["threshold", "accuracy", "precision", "recall", "f1"] as const) {
        assert.ok(
          Object.is(boundMetrics[key], directMetrics[key]),
          `${key} mismatch at instance ${i}`
        );
      }
    }
  } finally {
    fs.rmSync(dir, { recursive: true, force: true });
  }
});
