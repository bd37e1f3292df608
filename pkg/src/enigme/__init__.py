"""Deterministic text reasoning puzzles: generate, solve, grade, estimate."""

__version__ = "0.1.0"

from .estimate import estimate_variations, variation_axes
from .generate import generate_batch, generate_puzzle
from .grader import GradeResult, grade
from .model import (
    Category,
    ContractViolation,
    Dimension,
    EnigmeError,
    GenerationError,
    GridFormatError,
    PromptFormatError,
    Puzzle,
    VariationEstimate,
)
from .rng import RngStream, draw_range, make_rng

__all__ = [
    "Category",
    "ContractViolation",
    "Dimension",
    "EnigmeError",
    "GenerationError",
    "GradeResult",
    "GridFormatError",
    "PromptFormatError",
    "Puzzle",
    "RngStream",
    "VariationEstimate",
    "draw_range",
    "estimate_variations",
    "generate_batch",
    "generate_puzzle",
    "grade",
    "make_rng",
    "variation_axes",
    "__version__",
]
