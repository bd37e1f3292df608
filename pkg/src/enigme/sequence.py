"""Frame-series abduction puzzles.

An initial grid is transformed by one hidden rule; the prompt shows three
consecutive frames and asks for the fourth.  Rules are total on the grid
extents they were configured for and always preserve those extents.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .model import (
    Category,
    ContractViolation,
    Dimension,
    GenerationError,
    Puzzle,
    build_puzzle,
)
from .rng import RngStream
from .textgrid import (
    BACKGROUND_CHARS,
    FOREGROUND_CHARS,
    CharPalette,
    DEFAULT_PALETTE,
    Grid,
    render,
)

QUESTION_LINE = "What is the next frame?"
FRAME_SEPARATOR = "---"

RULE_KINDS = ("translate", "rotate_cycle", "char_cycle", "grow", "reflect_alternate")


@dataclass(frozen=True)
class SequenceRule:
    """Hidden transformation mapping frame k to frame k+1."""

    kind: str
    params: dict
    extents: tuple[int, int, int]

    def __post_init__(self):
        if self.kind not in RULE_KINDS:
            raise ContractViolation(f"unknown rule kind: {self.kind!r}")


@dataclass(frozen=True)
class SequenceSpec:
    """Everything needed to reproduce one sequence puzzle."""

    rule: SequenceRule
    initial: Grid
    shown_frames: int = 3
    palette: CharPalette = DEFAULT_PALETTE
    dimension: Dimension = Dimension.ONE

    def __post_init__(self):
        fg = sum(1 for c in self.initial.cells if c != self.initial.background)
        if fg == 0 or fg == len(self.initial.cells):
            raise ContractViolation("initial grid needs both foreground and background cells")
        if self.shown_frames < 2:
            raise ContractViolation("at least two frames must be shown")


@dataclass(frozen=True)
class SequenceConfig:
    """Active parameter ranges of the sequence generator."""

    extent_ranges: dict[int, tuple[tuple[int, int], ...]] = field(
        default_factory=lambda: {
            1: ((8, 16),),
            2: ((5, 9), (5, 9)),
            3: ((3, 5), (3, 5), (3, 5)),
        }
    )
    kinds: dict[int, tuple[str, ...]] = field(
        default_factory=lambda: {
            1: ("translate", "char_cycle", "grow", "reflect_alternate"),
            2: RULE_KINDS,
            3: RULE_KINDS,
        }
    )
    cycle_lengths: dict[int, tuple[int, ...]] = field(
        default_factory=lambda: {1: (2, 3), 2: (2, 3, 4), 3: (2, 3, 4)}
    )
    shown_frames: int = 3
    fg_chance: tuple[int, int] = (1, 4)
    palette: CharPalette = DEFAULT_PALETTE


DEFAULT_CONFIG = SequenceConfig()


def _active_counts(grid: Grid) -> tuple[int, ...]:
    w, h, d = grid.extents
    if d > 1:
        return (w, h, d)
    if h > 1:
        return (w, h)
    return (w,)


def _translate(grid: Grid, offsets: list[int]) -> Grid:
    w, h, d = grid.extents
    dx = offsets[0]
    dy = offsets[1] if len(offsets) > 1 else 0
    dz = offsets[2] if len(offsets) > 2 else 0
    cells = []
    for z in range(d):
        for y in range(h):
            for x in range(w):
                cells.append(grid.get((x - dx) % w, (y - dy) % h, (z - dz) % d))
    return Grid.from_cells(w, h, d, cells, grid.background)


def _rotate(grid: Grid, direction: str) -> Grid:
    w, h, d = grid.extents
    if w != h:
        raise ContractViolation("rotation requires square x/y extents")
    cells = []
    for z in range(d):
        for y in range(h):
            for x in range(w):
                if direction == "cw":
                    cells.append(grid.get(y, w - 1 - x, z))
                else:
                    cells.append(grid.get(w - 1 - y, x, z))
    return Grid.from_cells(w, h, d, cells, grid.background)


def _char_cycle(grid: Grid, cycle: str) -> Grid:
    step = {cycle[i]: cycle[(i + 1) % len(cycle)] for i in range(len(cycle))}
    return Grid(
        grid.width, grid.height, grid.depth,
        "".join(step.get(c, c) for c in grid.cells),
        grid.background,
    )


def _grow(grid: Grid, fill: str) -> Grid:
    w, h, d = grid.extents
    cells = list(grid.cells)
    for x, y, z in grid.coords():
        if grid.get(x, y, z) != grid.background:
            continue
        for nx, ny, nz in ((x - 1, y, z), (x + 1, y, z), (x, y - 1, z),
                           (x, y + 1, z), (x, y, z - 1), (x, y, z + 1)):
            if 0 <= nx < w and 0 <= ny < h and 0 <= nz < d \
                    and grid.get(nx, ny, nz) != grid.background:
                cells[grid.index(x, y, z)] = fill
                break
    return Grid.from_cells(w, h, d, cells, grid.background)


def _reflect(grid: Grid, axis: int) -> Grid:
    w, h, d = grid.extents
    cells = []
    for z in range(d):
        for y in range(h):
            for x in range(w):
                sx = w - 1 - x if axis == 0 else x
                sy = h - 1 - y if axis == 1 else y
                sz = d - 1 - z if axis == 2 else z
                cells.append(grid.get(sx, sy, sz))
    return Grid.from_cells(w, h, d, cells, grid.background)


def apply_rule(rule: SequenceRule, frame: Grid) -> Grid:
    """Deterministic next frame; extents must match the rule's configuration."""
    if frame.extents != rule.extents:
        raise ContractViolation(
            f"frame extents {frame.extents} do not match rule extents {rule.extents}"
        )
    if rule.kind == "translate":
        return _translate(frame, rule.params["offsets"])
    if rule.kind == "rotate_cycle":
        return _rotate(frame, rule.params["direction"])
    if rule.kind == "char_cycle":
        return _char_cycle(frame, rule.params["cycle"])
    if rule.kind == "grow":
        return _grow(frame, rule.params["char"])
    return _reflect(frame, rule.params["axis"])


def solve_sequence(spec: SequenceSpec) -> str:
    """Render of the rule applied shown_frames times to the initial grid."""
    frame = spec.initial
    for _ in range(spec.shown_frames):
        frame = apply_rule(spec.rule, frame)
    return render(frame)


def rule_from_meta(meta: dict[str, str]) -> SequenceRule:
    """Rebuild the hidden rule from puzzle metadata."""
    w, h, d = (int(v) for v in meta["grid"].split("x"))
    return SequenceRule(meta["rule"], json.loads(meta["params"]), (w, h, d))


def _canonical_cycle(chars: list[str]) -> str:
    pivot = chars.index(min(chars))
    return "".join(chars[pivot:] + chars[:pivot])


def _draw_extents(dim: Dimension, kind: str, rng: RngStream,
                  config: SequenceConfig) -> tuple[int, int, int]:
    ranges = config.extent_ranges[int(dim)]
    sizes = [rng.draw_range(lo, hi) for lo, hi in ranges]
    if kind == "rotate_cycle":
        sizes[1] = sizes[0]  # square x/y so rotation is extent-preserving
    while len(sizes) < 3:
        sizes.append(1)
    return (sizes[0], sizes[1], sizes[2])


def _draw_params(dim: Dimension, kind: str, rng: RngStream, config: SequenceConfig) -> dict:
    palette = config.palette.foreground_set
    if kind == "translate":
        while True:
            offsets = [rng.draw_range(-2, 2) for _ in range(int(dim))]
            if any(offsets):
                return {"offsets": offsets}
    if kind == "rotate_cycle":
        return {"direction": rng.choice(("cw", "ccw"))}
    if kind == "char_cycle":
        length = rng.choice(config.cycle_lengths[int(dim)])
        picks = rng.sample_distinct(0, len(palette) - 1, length)
        return {"cycle": _canonical_cycle([palette[i] for i in picks])}
    if kind == "grow":
        return {"char": rng.choice(palette)}
    return {"axis": rng.draw_range(0, int(dim) - 1)}


def _draw_pattern(extents: tuple[int, int, int], background: str, kind: str,
                  params: dict, rng: RngStream, config: SequenceConfig) -> Grid:
    w, h, d = extents
    total = w * h * d
    cells = [background] * total
    if kind == "grow":
        seeds = rng.draw_range(1, 2 if total <= 16 else 3)
        for i in rng.sample_distinct(0, total - 1, seeds):
            cells[i] = params["char"]
        return Grid.from_cells(w, h, d, cells, background)
    pool = params["cycle"] if kind == "char_cycle" else config.palette.foreground_set
    num, den = config.fg_chance
    for i in range(total):
        if rng.chance(num, den):
            cells[i] = rng.choice(pool)
    return Grid.from_cells(w, h, d, cells, background)


def _frames_prompt(frames: list[Grid]) -> str:
    return (FRAME_SEPARATOR + "\n").join(render(f) for f in frames) + QUESTION_LINE


def generate_sequence(dim: Dimension, rng: RngStream, *, seed: int,
                      config: SequenceConfig = DEFAULT_CONFIG) -> Puzzle:
    """Draw background, rule and initial pattern; redraw on degenerate output."""
    for _ in range(1000):
        background = rng.choice(BACKGROUND_CHARS)
        kind = rng.choice(config.kinds[int(dim)])
        extents = _draw_extents(dim, kind, rng, config)
        params = _draw_params(dim, kind, rng, config)
        initial = _draw_pattern(extents, background, kind, params, rng, config)

        fg_cells = [c for c in initial.cells if c != background]
        if not fg_cells or len(fg_cells) == len(initial.cells):
            continue
        if kind == "char_cycle" and len(params["cycle"]) == 4 \
                and not set(params["cycle"]) <= set(fg_cells):
            continue  # every cycle member must be visible or the cycle is unlearnable
        rule = SequenceRule(kind, params, extents)
        if apply_rule(rule, initial) == initial:
            continue

        spec = SequenceSpec(rule, initial, config.shown_frames, config.palette, dim)
        frames = [initial]
        for _ in range(config.shown_frames - 1):
            frames.append(apply_rule(rule, frames[-1]))
        solution = solve_sequence(spec)
        meta = {
            "rule": kind,
            "params": json.dumps(params, sort_keys=True),
            "grid": "x".join(str(v) for v in extents),
            "background": background,
        }
        return build_puzzle(
            Category.SEQUENCE, dim, seed, _frames_prompt(frames), solution, meta
        )
    raise GenerationError("could not draw a non-degenerate sequence puzzle")


def _permutations(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _rule_configurations(dim: Dimension, config: SequenceConfig) -> int:
    palette = len(config.palette.foreground_set)
    total = 0
    for kind in config.kinds[int(dim)]:
        if kind == "translate":
            total += 5 ** int(dim) - 1
        elif kind == "rotate_cycle":
            total += 2
        elif kind == "char_cycle":
            # Cycles are canonical up to rotation: P(n, L) / L distinct mappings.
            total += sum(_permutations(palette, L) // L for L in config.cycle_lengths[int(dim)])
        elif kind == "grow":
            total += palette
        elif kind == "reflect_alternate":
            total += int(dim)
    return total


def variation_axes(dim: Dimension, config: SequenceConfig = DEFAULT_CONFIG) -> tuple[tuple[str, int], ...]:
    """Independent choice axes of the sequence generator at one dimension."""
    ranges = config.extent_ranges[int(dim)]
    extent_combos = 1
    min_cells = 1
    for lo, hi in ranges:
        extent_combos *= hi - lo + 1
        min_cells *= lo
    return (
        ("background", len(config.palette.background_set)),
        ("extent", extent_combos),
        ("rule", _rule_configurations(dim, config)),
        ("pattern", 2 ** min_cells),
    )
