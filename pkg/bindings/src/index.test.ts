import assert from "node:assert/strict";
import { execFile } from "node:child_process";
import { test } from "node:test";

import { EnigmeClient } from "./index";

const COMMAND = (process.env.ENIGME_COMMAND ?? "python3 -m enigme").split(/\s+/);
const client = new EnigmeClient({ command: COMMAND });

function cliRaw(args: string[]): Promise<string> {
  const [executable, ...prefix] = COMMAND;
  return new Promise((resolve, reject) => {
    execFile(executable, [...prefix, ...args], { maxBuffer: 64 * 1024 * 1024 },
      (error, stdout) => (error ? reject(error) : resolve(stdout)));
  });
}

function randomTriples(count: number): Array<[string, number, number]> {
  // Deterministic spread over categories, dimensions and a seed range.
  const categories = ["numeric", "sequence", "physics"];
  const triples: Array<[string, number, number]> = [];
  let state = 0x12345678n;
  for (let i = 0; i < count; i += 1) {
    state = (state * 6364136223846793005n + 1442695040888963407n) & 0xffffffffffffffffn;
    const seed = Number(state % 1000000n);
    triples.push([categories[i % 3], (i % 9) % 3 + 1, seed]);
  }
  return triples;
}

async function mapLimited<T, R>(items: T[], limit: number, fn: (item: T) => Promise<R>): Promise<R[]> {
  const results: R[] = new Array(items.length);
  let next = 0;
  async function worker() {
    while (next < items.length) {
      const index = next;
      next += 1;
      results[index] = await fn(items[index]);
    }
  }
  await Promise.all(Array.from({ length: limit }, worker));
  return results;
}

test("bindings parity: 100 random triples match CLI JSONL byte for byte", async () => {
  const triples = randomTriples(100);
  await mapLimited(triples, 8, async ([category, dimension, seed]) => {
    const viaBinding = await client.generateRaw(category, dimension, seed);
    const direct = await cliRaw([
      category, `${dimension}d`, "--seed", String(seed),
      "--format", "jsonl", "--with-solution",
    ]);
    assert.equal(viaBinding + "\n", direct, `${category} ${dimension}d seed ${seed}`);

    const record = JSON.parse(viaBinding);
    assert.equal(record.category, category);
    assert.equal(record.dimension, dimension);
    assert.equal(record.seed, seed);
    assert.ok(record.id.length === 16);
    assert.ok(record.prompt.length > 0);
    assert.ok(record.solution.length > 0);
    assert.equal(record.meta.spec_version, "1");
  });
});

test("generate is deterministic across calls", async () => {
  const first = await client.generate("physics", 1, 1);
  const second = await client.generate("physics", 1, 1);
  assert.deepEqual(first, second);
});

test("invalid arguments raise range errors without spawning", async () => {
  await assert.rejects(() => client.generate("numeric", 4, 1), RangeError);
  await assert.rejects(() => client.generate("algebra", 1, 1), RangeError);
  await assert.rejects(() => client.generate("numeric", 1, -5), RangeError);
  await assert.rejects(() => client.gradeDetailed("a", "a", "fuzzy"), RangeError);
});

test("grade parity with the grader suite", async () => {
  assert.equal(await client.grade("6", "6", "exact"), 1);
  assert.equal(await client.grade("...X\n", "...X \r\n", "normalized"), 1);
  assert.equal(await client.grade("6", "The answer is 6.", "normalized"), 1);
  assert.equal(await client.grade("6", "16", "normalized"), 0);
  assert.equal(await client.grade("6", "2 or 3", "normalized"), 0);

  const puzzle = await client.generate("sequence", 2, 11);
  assert.equal(await client.grade(puzzle.solution, puzzle.solution, "exact"), 1);
  assert.equal(await client.grade(puzzle.solution, puzzle.solution, "normalized"), 1);

  const detail = await client.gradeDetailed("6", "16", "normalized");
  assert.equal(detail.score, 0);
  assert.ok(detail.detail);
});

test("estimate exposes exact cardinalities", async () => {
  const all = await client.estimate();
  assert.equal(all.length, 9);
  const table = new Map(all.map((row) => [`${row.category}:${row.dimension}`, row.cardinality]));
  assert.ok((table.get("numeric:1") ?? 0n) >= 100000n);
  assert.ok((table.get("sequence:1") ?? 0n) >= 1000000n);
  assert.ok((table.get("physics:1") ?? 0n) >= 1000000n);

  const one = await client.estimate("numeric", 1);
  assert.equal(one.length, 1);
  assert.equal(one[0].cardinality, table.get("numeric:1"));
});
