"""Variation-cardinality calculator.

Each generator exposes its independent choice axes; the cardinality of a
(category, dimension) cell is the exact product of the axis counts in the
active configuration.  Nothing here is hard-coded: adding a template or a
rule to a configuration grows the product.
"""

from __future__ import annotations

from . import numeric, physics, sequence
from .model import Category, Dimension, VariationEstimate


def variation_axes(category: Category, dimension: Dimension,
                   config=None) -> tuple[tuple[str, int], ...]:
    """The named free-parameter axes of one generator cell."""
    if category == Category.NUMERIC:
        return numeric.variation_axes(dimension, config or numeric.DEFAULT_CONFIG)
    if category == Category.SEQUENCE:
        return sequence.variation_axes(dimension, config or sequence.DEFAULT_CONFIG)
    return physics.variation_axes(dimension, config or physics.DEFAULT_CONFIG)


def estimate_variations(category: Category, dimension: Dimension,
                        config=None) -> VariationEstimate:
    """Exact product of free-parameter counts for one generator cell."""
    cardinality = 1
    for _, count in variation_axes(category, dimension, config):
        cardinality *= count
    return VariationEstimate(category, dimension, cardinality)


def estimate_table(categories=None, dimensions=None) -> list[VariationEstimate]:
    """Estimates for every requested cell, in category-major order."""
    cats = list(categories or Category)
    dims = list(dimensions or Dimension)
    return [estimate_variations(c, d) for c in cats for d in dims]
