"""Command-line front end.

Grammar:
    enigme <numeric|sequence|physics> <1d|2d|3d> [--seed N] [--count N]
           [--format text|jsonl] [--with-solution] [--out PATH] [--estimate]
    enigme --estimate
    enigme grade (--solution TEXT | --solution-file PATH)
                 (--candidate TEXT | --candidate-file PATH) [--mode MODE]
    enigme serve [--host HOST] [--port PORT]

stdout carries puzzle data only; diagnostics go to stderr.  Exit codes:
0 success, 2 usage error, 3 unwritable output, 4 generation failure.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import secrets
import sys

from .estimate import estimate_table, estimate_variations
from .generate import generate_batch
from .grader import grade
from .model import Category, Dimension, GenerationError, Puzzle

_MASK64 = (1 << 64) - 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_OUTPUT = 3
EXIT_GENERATION = 4

_CATEGORIES = ("numeric", "sequence", "physics")
_TEXT_SEPARATOR = "========"


def puzzle_to_json(puzzle: Puzzle, with_solution: bool) -> str:
    """One JSONL record; field order is part of the wire contract."""
    record: dict = {
        "id": puzzle.id,
        "category": puzzle.category.value,
        "dimension": int(puzzle.dimension),
        "seed": puzzle.seed,
        "prompt": puzzle.prompt,
    }
    if with_solution:
        record["solution"] = puzzle.solution
    record["meta"] = puzzle.meta
    return json.dumps(record, separators=(",", ":"))


def _puzzle_to_text(puzzle: Puzzle, with_solution: bool) -> str:
    block = puzzle.prompt
    if not block.endswith("\n"):
        block += "\n"
    if with_solution:
        block += "SOLUTION:\n" + puzzle.solution
        if not block.endswith("\n"):
            block += "\n"
    return block


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="enigme",
        description="Generate, grade and serve text reasoning puzzles.",
    )
    parser.add_argument("--estimate", action="store_true",
                        help="print variation estimates instead of puzzles")
    sub = parser.add_subparsers(dest="command", metavar="command")

    for name in _CATEGORIES:
        p = sub.add_parser(name, help=f"generate {name} puzzles")
        p.add_argument("dimension", nargs="?", choices=("1d", "2d", "3d"),
                       help="puzzle complexity")
        p.add_argument("--seed", type=int, default=None,
                       help="64-bit base seed (default: ENIGME_SEED or system entropy)")
        p.add_argument("--count", type=int, default=1, help="number of puzzles")
        p.add_argument("--format", dest="fmt", choices=("text", "jsonl"),
                       default="text", help="output format")
        p.add_argument("--with-solution", action="store_true",
                       help="include the canonical solution")
        p.add_argument("--out", default=None, help="write output to a file")
        p.add_argument("--estimate", action="store_true",
                       help="print variation estimates instead of puzzles")

    g = sub.add_parser("grade", help="score a candidate answer")
    g.add_argument("--mode", choices=("exact", "normalized"), default="normalized")
    g.add_argument("--solution", default=None)
    g.add_argument("--solution-file", default=None)
    g.add_argument("--candidate", default=None)
    g.add_argument("--candidate-file", default=None)

    s = sub.add_parser("serve", help="run the HTTP service")
    s.add_argument("--host", default="127.0.0.1")
    s.add_argument("--port", type=int, default=8000)
    return parser


def _resolve_seed(args, err) -> int | None:
    if args.seed is not None:
        return args.seed & _MASK64
    env = os.environ.get("ENIGME_SEED")
    if env is not None:
        try:
            return int(env) & _MASK64
        except ValueError:
            _usage(err, f"invalid ENIGME_SEED: {env!r}")
            return None
    seed = secrets.randbits(64)
    print(f"seed: {seed}", file=err)
    return seed


def _usage(err, message: str):
    print(f"enigme: error: {message}", file=err)
    return None


def _emit(text: str, out_path: str | None, out, err) -> int:
    if out_path is None:
        out.write(text)
        return EXIT_OK
    try:
        with open(out_path, "w", encoding="ascii") as fh:
            fh.write(text)
    except OSError as exc:
        _usage(err, f"cannot write {out_path!r}: {exc}")
        return EXIT_OUTPUT
    return EXIT_OK


def _run_estimates(category: str | None, dimension: str | None,
                   out_path: str | None, out, err) -> int:
    if category is None:
        rows = estimate_table()
    elif dimension is None:
        rows = estimate_table(categories=[Category.parse(category)])
    else:
        rows = [estimate_variations(Category.parse(category), Dimension.parse(dimension))]
    text = "".join(
        f"{row.category.value} {row.dimension.token} {row.cardinality}\n" for row in rows
    )
    return _emit(text, out_path, out, err)


def _run_generate(args, out, err) -> int:
    if args.estimate:
        return _run_estimates(args.command, args.dimension, args.out, out, err)
    if args.dimension is None:
        _usage(err, "a dimension (1d, 2d or 3d) is required")
        return EXIT_USAGE
    if args.count < 1:
        _usage(err, "--count must be at least 1")
        return EXIT_USAGE
    base_seed = _resolve_seed(args, err)
    if base_seed is None:
        return EXIT_USAGE

    try:
        puzzles = generate_batch(args.command, Dimension.parse(args.dimension),
                                 base_seed, args.count)
    except GenerationError as exc:
        _usage(err, f"generation failed: {exc}")
        return EXIT_GENERATION

    if args.fmt == "jsonl":
        text = "".join(puzzle_to_json(p, args.with_solution) + "\n" for p in puzzles)
    else:
        blocks = [_puzzle_to_text(p, args.with_solution) for p in puzzles]
        text = (_TEXT_SEPARATOR + "\n").join(blocks)
    return _emit(text, args.out, out, err)


def _read_side(label: str, literal: str | None, path: str | None,
               err) -> tuple[str | None, int]:
    if (literal is None) == (path is None):
        _usage(err, f"provide exactly one of --{label} or --{label}-file")
        return None, EXIT_USAGE
    if literal is not None:
        return literal, EXIT_OK
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read(), EXIT_OK
    except OSError as exc:
        _usage(err, f"cannot read {path!r}: {exc}")
        return None, EXIT_OUTPUT


def _run_grade(args, out, err) -> int:
    solution, status = _read_side("solution", args.solution, args.solution_file, err)
    if solution is None:
        return status
    candidate, status = _read_side("candidate", args.candidate, args.candidate_file, err)
    if candidate is None:
        return status
    result = grade(solution, candidate, args.mode)
    out.write(json.dumps(
        {"score": result.score, "mode": result.mode, "detail": result.detail},
        separators=(",", ":"),
    ) + "\n")
    return EXIT_OK


def _run_serve(args, err) -> int:
    import uvicorn

    uvicorn.run("enigme.service:app", host=args.host, port=args.port)
    return EXIT_OK


def run(argv=None, stdout=None, stderr=None) -> int:
    """Parse and execute; returns the exit status instead of raising SystemExit."""
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    if args.command in _CATEGORIES:
        return _run_generate(args, out, err)
    if args.command == "grade":
        return _run_grade(args, out, err)
    if args.command == "serve":
        return _run_serve(args, err)
    if args.estimate:
        return _run_estimates(None, None, None, out, err)
    parser.print_usage(err)
    return EXIT_USAGE


def main(argv=None) -> None:
    sys.exit(run(argv))
