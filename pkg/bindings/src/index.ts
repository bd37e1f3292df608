/**
 * Thin Node client for the enigme puzzle generator.
 *
 * All calls shell out to the `enigme` CLI and speak its JSONL wire format,
 * so records are byte-identical to what the CLI emits; nothing is
 * reimplemented on this side.
 */

import { execFile } from "node:child_process";

export interface BoundPuzzle {
  id: string;
  category: string;
  dimension: number;
  seed: number;
  prompt: string;
  solution: string;
  meta: Record<string, string>;
}

export interface GradeDetail {
  score: number;
  mode: string;
  detail: string | null;
}

export interface VariationEstimate {
  category: string;
  dimension: number;
  cardinality: bigint;
}

export interface ClientOptions {
  /** Command vector that invokes the CLI, e.g. ["python3", "-m", "enigme"]. */
  command?: string[];
  /** Extra environment variables for the spawned process. */
  env?: Record<string, string>;
  /** Per-call timeout in milliseconds. */
  timeoutMs?: number;
}

const CATEGORIES = new Set(["numeric", "sequence", "physics"]);
const MODES = new Set(["exact", "normalized"]);

function defaultCommand(): string[] {
  const fromEnv = process.env.ENIGME_COMMAND;
  if (fromEnv && fromEnv.trim() !== "") {
    return fromEnv.trim().split(/\s+/);
  }
  return ["enigme"];
}

function checkCategory(category: string): void {
  if (!CATEGORIES.has(category)) {
    throw new RangeError(`unknown category: ${category}`);
  }
}

function checkDimension(dimension: number): void {
  if (!Number.isInteger(dimension) || dimension < 1 || dimension > 3) {
    throw new RangeError(`dimension must be 1, 2 or 3, got ${dimension}`);
  }
}

function checkSeed(seed: number): void {
  if (!Number.isSafeInteger(seed) || seed < 0) {
    throw new RangeError(`seed must be a non-negative safe integer, got ${seed}`);
  }
}

export class EnigmeClient {
  private readonly command: string[];
  private readonly env?: Record<string, string>;
  private readonly timeoutMs: number;

  constructor(options: ClientOptions = {}) {
    this.command = options.command ?? defaultCommand();
    this.env = options.env;
    this.timeoutMs = options.timeoutMs ?? 60_000;
  }

  private invoke(args: string[]): Promise<string> {
    const [executable, ...prefix] = this.command;
    return new Promise((resolve, reject) => {
      execFile(
        executable,
        [...prefix, ...args],
        {
          timeout: this.timeoutMs,
          env: this.env ? { ...process.env, ...this.env } : process.env,
          maxBuffer: 64 * 1024 * 1024,
        },
        (error, stdout, stderr) => {
          if (error) {
            reject(new Error(`enigme ${args.join(" ")} failed: ${stderr || error.message}`));
          } else {
            resolve(stdout);
          }
        },
      );
    });
  }

  /** Raw JSONL line for one puzzle, byte-identical to the CLI output. */
  async generateRaw(category: string, dimension: number, seed: number): Promise<string> {
    checkCategory(category);
    checkDimension(dimension);
    checkSeed(seed);
    const stdout = await this.invoke([
      category,
      `${dimension}d`,
      "--seed",
      String(seed),
      "--format",
      "jsonl",
      "--with-solution",
    ]);
    return stdout.endsWith("\n") ? stdout.slice(0, -1) : stdout;
  }

  /** One puzzle as a plain record. */
  async generate(category: string, dimension: number, seed: number): Promise<BoundPuzzle> {
    return JSON.parse(await this.generateRaw(category, dimension, seed)) as BoundPuzzle;
  }

  /** Score a candidate answer: 1 for a match under the mode, else 0. */
  async grade(solution: string, candidate: string, mode = "normalized"): Promise<number> {
    return (await this.gradeDetailed(solution, candidate, mode)).score;
  }

  async gradeDetailed(solution: string, candidate: string, mode = "normalized"): Promise<GradeDetail> {
    if (!MODES.has(mode)) {
      throw new RangeError(`unknown grade mode: ${mode}`);
    }
    const stdout = await this.invoke([
      "grade",
      "--mode",
      mode,
      "--solution",
      solution,
      "--candidate",
      candidate,
    ]);
    return JSON.parse(stdout) as GradeDetail;
  }

  /** Exact variation cardinalities, for all cells or a selection. */
  async estimate(category?: string, dimension?: number): Promise<VariationEstimate[]> {
    const args: string[] = [];
    if (category !== undefined) {
      checkCategory(category);
      args.push(category);
      if (dimension !== undefined) {
        checkDimension(dimension);
        args.push(`${dimension}d`);
      }
    } else if (dimension !== undefined) {
      throw new RangeError("a dimension filter requires a category");
    }
    args.push("--estimate");
    const stdout = await this.invoke(args);
    return stdout
      .split("\n")
      .filter((line) => line !== "")
      .map((line) => {
        const [cat, dim, cardinality] = line.split(" ");
        return {
          category: cat,
          dimension: Number(dim.replace("d", "")),
          cardinality: BigInt(cardinality),
        };
      });
  }
}

export default EnigmeClient;
