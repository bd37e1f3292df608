"""Shared domain types: categories, dimensions, puzzles, estimates, errors."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class EnigmeError(Exception):
    """Base class for all package errors."""


class ContractViolation(EnigmeError):
    """A caller broke a documented precondition."""


class GridFormatError(EnigmeError, ValueError):
    """Text does not conform to the grid layout."""


class PromptFormatError(EnigmeError, ValueError):
    """Puzzle text cannot be analysed (missing or duplicated mask, bad shape)."""


class GenerationError(EnigmeError):
    """The generator could not produce a valid puzzle."""


class Category(enum.Enum):
    """The three puzzle classes."""

    NUMERIC = "numeric"
    SEQUENCE = "sequence"
    PHYSICS = "physics"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> "Category":
        try:
            return cls(text.lower())
        except ValueError:
            raise ContractViolation(f"unknown category: {text!r}") from None


class Dimension(enum.IntEnum):
    """Puzzle complexity level; only 1, 2 and 3 exist."""

    ONE = 1
    TWO = 2
    THREE = 3

    @classmethod
    def parse(cls, text: str) -> "Dimension":
        """Accept '1d', '2d', '3d' or a bare digit."""
        token = text.lower().removesuffix("d")
        try:
            return cls(int(token))
        except ValueError:
            raise ContractViolation(f"unknown dimension: {text!r}") from None

    @property
    def token(self) -> str:
        return f"{self.value}d"


_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash."""
    h = _FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


def puzzle_id(category: Category, dimension: Dimension, seed: int) -> str:
    """16 hex digits: FNV-1a over 'category:dimension:seed'."""
    key = f"{category.value}:{int(dimension)}:{seed}"
    return format(fnv1a64(key.encode("ascii")), "016x")


def _printable(text: str) -> bool:
    return all(ch == "\n" or 0x20 <= ord(ch) <= 0x7E for ch in text)


@dataclass(frozen=True)
class Puzzle:
    """One generated puzzle with its canonical solution.

    Regenerating with the same (category, dimension, seed) yields a
    byte-identical value.  meta holds generator parameters as strings.
    """

    id: str
    category: Category
    dimension: Dimension
    seed: int
    prompt: str
    solution: str
    meta: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if not self.solution:
            raise ContractViolation("puzzle solution must be non-empty")
        if not _printable(self.prompt):
            raise ContractViolation("puzzle prompt contains non-printable characters")


def build_puzzle(
    category: Category,
    dimension: Dimension,
    seed: int,
    prompt: str,
    solution: str,
    meta: dict[str, str],
) -> Puzzle:
    meta = dict(meta)
    meta["spec_version"] = "1"
    return Puzzle(
        id=puzzle_id(category, dimension, seed),
        category=category,
        dimension=dimension,
        seed=seed,
        prompt=prompt,
        solution=solution,
        meta=meta,
    )


@dataclass(frozen=True)
class VariationEstimate:
    """Exact cardinality of the free-parameter space of one generator cell."""

    category: Category
    dimension: Dimension
    cardinality: int

    def __post_init__(self):
        if self.cardinality < 1:
            raise ContractViolation("cardinality must be >= 1")
