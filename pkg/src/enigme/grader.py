"""Scores a candidate answer against a puzzle's canonical solution."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

from .model import ContractViolation

GradeMode = Literal["exact", "normalized"]

_DIGIT_RUNS = re.compile(r"\d+")


@dataclass(frozen=True)
class GradeResult:
    score: int  # 0 or 1
    mode: GradeMode
    detail: str | None = None


def _normalize(text: str) -> str:
    text = text.replace("\r\n", "\n")
    lines = [line.rstrip() for line in text.split("\n")]
    while lines and lines[0] == "":
        lines.pop(0)
    while lines and lines[-1] == "":
        lines.pop()
    return "\n".join(lines)


def _first_mismatch(solution: str, candidate: str) -> str:
    sol_lines = solution.split("\n")
    cand_lines = candidate.split("\n")
    for i in range(max(len(sol_lines), len(cand_lines))):
        left = sol_lines[i] if i < len(sol_lines) else ""
        right = cand_lines[i] if i < len(cand_lines) else ""
        if left != right:
            for j in range(max(len(left), len(right))):
                if j >= len(left) or j >= len(right) or left[j] != right[j]:
                    return f"first mismatch at line {i + 1}, column {j + 1}"
    return "texts differ"


def grade(solution: str, candidate: str, mode: GradeMode = "normalized") -> GradeResult:
    """Score 1 when the candidate matches under the chosen equivalence.

    exact compares byte for byte.  normalized maps CRLF to LF, strips
    per-line trailing whitespace and surrounding blank lines, and for
    integer solutions accepts a candidate whose single digit run equals
    the answer.  Ungradable input scores 0 with detail set.
    """
    if mode not in ("exact", "normalized"):
        raise ContractViolation(f"unknown grade mode: {mode!r}")

    if mode == "exact":
        if solution == candidate:
            return GradeResult(1, mode)
        return GradeResult(0, mode, _first_mismatch(solution, candidate))

    sol = _normalize(solution)
    cand = _normalize(candidate)
    if sol.isdigit():
        runs = _DIGIT_RUNS.findall(cand)
        if len(runs) != 1:
            return GradeResult(0, mode, f"expected one number, found {len(runs)}")
        if int(runs[0]) == int(sol):
            return GradeResult(1, mode)
        return GradeResult(0, mode, f"expected {sol}, found {runs[0]}")
    if sol == cand:
        return GradeResult(1, mode)
    return GradeResult(0, mode, _first_mismatch(sol, cand))
