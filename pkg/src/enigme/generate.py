"""Single entry point for seeded puzzle generation."""

from __future__ import annotations

from .model import Category, Dimension, Puzzle
from .numeric import generate_numeric
from .physics import generate_physics
from .rng import make_rng
from .sequence import generate_sequence

_MASK64 = (1 << 64) - 1


def generate_puzzle(category: Category | str, dimension: Dimension | int, seed: int) -> Puzzle:
    """Generate the puzzle for (category, dimension, seed); pure and repeatable."""
    if isinstance(category, str):
        category = Category.parse(category)
    dimension = Dimension(dimension)
    seed &= _MASK64
    rng = make_rng(seed)
    if category == Category.NUMERIC:
        return generate_numeric(dimension, rng, seed=seed)
    if category == Category.SEQUENCE:
        return generate_sequence(dimension, rng, seed=seed)
    return generate_physics(dimension, rng, seed=seed)


def generate_batch(category: Category | str, dimension: Dimension | int,
                   base_seed: int, count: int) -> list[Puzzle]:
    """Puzzle i of a batch uses seed base_seed + i (wrapping at 64 bits)."""
    return [
        generate_puzzle(category, dimension, (base_seed + i) & _MASK64)
        for i in range(count)
    ]
