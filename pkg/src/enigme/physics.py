"""Intuitive-physics frame puzzles.

Bodies move on an integer grid with velocity capped at 2 cells per frame,
acceleration in {-1, 0, +1}, perfectly reflective walls and equal-mass
elastic collisions.  One dynamics flavour per puzzle constrains the initial
conditions so the phenomenon is observable in the four-frame window.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .model import (
    Category,
    ContractViolation,
    Dimension,
    EnigmeError,
    GenerationError,
    Puzzle,
    build_puzzle,
)
from .rng import RngStream
from .sequence import FRAME_SEPARATOR, QUESTION_LINE
from .textgrid import BACKGROUND_CHARS, CharPalette, DEFAULT_PALETTE, Grid, render

MAX_SPEED = 2

FLAVOURS = ("uniform", "acceleration", "deceleration", "bounce", "collision")


class UnresolvableCollision(EnigmeError):
    """More than two bodies contest one cell; the generator must redraw."""


@dataclass(frozen=True)
class Body:
    """One moving glyph; vectors are sized to the world's active axes."""

    glyph: str
    position: tuple[int, ...]
    velocity: tuple[int, ...]
    acceleration: tuple[int, ...]

    def __post_init__(self):
        if len(self.glyph) != 1:
            raise ContractViolation("glyph must be a single character")
        if not len(self.position) == len(self.velocity) == len(self.acceleration):
            raise ContractViolation("kinematic vectors must share one length")
        if any(abs(v) > MAX_SPEED for v in self.velocity):
            raise ContractViolation(f"speed cap is {MAX_SPEED} cells per frame")
        if any(abs(a) > 1 for a in self.acceleration):
            raise ContractViolation("acceleration must lie in {-1, 0, +1}")


@dataclass(frozen=True)
class World:
    """Bounded grid with 1-3 bodies and reflective walls."""

    extents: tuple[int, int, int]
    bodies: tuple[Body, ...]
    background: str

    def __post_init__(self):
        if not 1 <= len(self.bodies) <= 3:
            raise ContractViolation("worlds hold between one and three bodies")
        axes = self.axis_limits
        for size in axes:
            if size + 1 < 4:
                raise ContractViolation("active axes need at least 4 cells")
        seen_cells = set()
        seen_glyphs = set()
        for body in self.bodies:
            if len(body.position) != len(axes):
                raise ContractViolation("body vectors must match the active axes")
            for coord, limit in zip(body.position, axes):
                if not 0 <= coord <= limit:
                    raise ContractViolation("body out of bounds")
            if body.position in seen_cells:
                raise ContractViolation("two bodies share a cell")
            if body.glyph in seen_glyphs:
                raise ContractViolation("two bodies share a glyph")
            seen_cells.add(body.position)
            seen_glyphs.add(body.glyph)

    @property
    def dimension(self) -> int:
        w, h, d = self.extents
        if d > 1:
            return 3
        if h > 1:
            return 2
        return 1

    @property
    def axis_limits(self) -> tuple[int, ...]:
        """Highest valid coordinate per active axis."""
        return tuple(size - 1 for size in self.extents[: self.dimension])


@dataclass(frozen=True)
class StepEvents:
    """What happened during one step, for generator-side filtering."""

    reflections: tuple[tuple[int, int], ...] = ()  # (body index, axis)
    collisions: tuple[tuple[int, int], ...] = ()   # body index pairs
    stops: tuple[tuple[int, int], ...] = ()        # (body index, axis)


def _advance_body(body: Body, limits: tuple[int, ...], idx: int,
                  reflections: list, stops: list) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    position, velocity, acceleration = [], [], []
    for axis, limit in enumerate(limits):
        v, a = body.velocity[axis], body.acceleration[axis]
        nv = max(-MAX_SPEED, min(MAX_SPEED, v + a))
        na = a
        if a * v < 0 and (v + a) * v <= 0:
            # Deceleration reaching or crossing zero parks the body on this axis.
            nv, na = 0, 0
            stops.append((idx, axis))
        p = body.position[axis] + nv
        while not 0 <= p <= limit:
            if p > limit:
                p = 2 * limit - p
            else:
                p = -p
            nv = -nv
            reflections.append((idx, axis))
        position.append(p)
        velocity.append(nv)
        acceleration.append(na)
    return tuple(position), tuple(velocity), tuple(acceleration)


def step_with_events(world: World) -> tuple[World, StepEvents]:
    """One frame of dynamics plus the events it produced."""
    limits = world.axis_limits
    reflections: list[tuple[int, int]] = []
    stops: list[tuple[int, int]] = []
    moved = [
        _advance_body(body, limits, i, reflections, stops)
        for i, body in enumerate(world.bodies)
    ]

    # Pairwise elastic exchange on final tentative positions: bodies that
    # would share a cell, or trade cells through each other, stay put and
    # swap velocity vectors.
    partner: dict[int, int] = {}
    collisions: list[tuple[int, int]] = []
    for i in range(len(moved)):
        for j in range(i + 1, len(moved)):
            head_on = moved[i][0] == moved[j][0]
            swap_through = (
                moved[i][0] == world.bodies[j].position
                and moved[j][0] == world.bodies[i].position
            )
            if head_on or swap_through:
                if i in partner or j in partner:
                    raise UnresolvableCollision("a body is contested by two partners")
                partner[i], partner[j] = j, i
                collisions.append((i, j))

    bodies = []
    for i, body in enumerate(world.bodies):
        pos, vel, acc = moved[i]
        if i in partner:
            pos = body.position
            vel = moved[partner[i]][1]
        bodies.append(Body(body.glyph, pos, vel, acc))

    if len({b.position for b in bodies}) != len(bodies):
        raise UnresolvableCollision("collision fallout left two bodies on one cell")
    next_world = World(world.extents, tuple(bodies), world.background)
    return next_world, StepEvents(tuple(reflections), tuple(collisions), tuple(stops))


def step(world: World) -> World:
    """One frame of dynamics: accelerate, move, reflect, resolve collisions."""
    return step_with_events(world)[0]


def world_to_grid(world: World) -> Grid:
    """Paint body glyphs over the background."""
    w, h, d = world.extents
    cells = [world.background] * (w * h * d)
    for body in world.bodies:
        x = body.position[0]
        y = body.position[1] if len(body.position) > 1 else 0
        z = body.position[2] if len(body.position) > 2 else 0
        cells[x + w * (y + h * z)] = body.glyph
    return Grid.from_cells(w, h, d, cells, world.background)


def solve_physics(world: World) -> str:
    """Render of the frame following the given state."""
    return render(world_to_grid(step(world)))


def world_from_meta(meta: dict[str, str]) -> World:
    """Rebuild the initial world state recorded in puzzle metadata."""
    extents = tuple(int(v) for v in meta["grid"].split("x"))
    bodies = tuple(
        Body(
            entry["glyph"],
            tuple(entry["pos"]),
            tuple(entry["vel"]),
            tuple(entry["acc"]),
        )
        for entry in json.loads(meta["bodies"])
    )
    return World(extents, bodies, meta["background"])


@dataclass(frozen=True)
class PhysicsConfig:
    """Active parameter ranges of the physics generator."""

    extent_ranges: dict[int, tuple[tuple[int, int], ...]] = field(
        default_factory=lambda: {
            1: ((8, 16),),
            2: ((6, 9), (6, 9)),
            3: ((4, 5), (4, 5), (4, 5)),
        }
    )
    flavours: tuple[str, ...] = FLAVOURS
    body_counts: tuple[int, int] = (1, 3)
    palette: CharPalette = DEFAULT_PALETTE
    shown_frames: int = 3


DEFAULT_CONFIG = PhysicsConfig()


def _cell_coords(index: int, sizes: tuple[int, ...]) -> tuple[int, ...]:
    coords = []
    for size in sizes:
        coords.append(index % size)
        index //= size
    return tuple(coords)


def _draw_subject(flavour: str, sizes: tuple[int, ...], rng: RngStream) -> tuple[tuple, tuple]:
    """(velocity, acceleration) of the flavour-defining body."""
    dim = len(sizes)
    zeros = (0,) * dim
    if flavour == "uniform":
        while True:
            vel = tuple(rng.draw_range(-MAX_SPEED, MAX_SPEED) for _ in range(dim))
            if any(vel):
                return vel, zeros
    axis = rng.draw_range(0, dim - 1)
    direction = rng.choice((-1, 1))
    if flavour == "acceleration":
        acc = tuple(direction if i == axis else 0 for i in range(dim))
        return zeros, acc
    if flavour == "deceleration":
        vel = tuple(MAX_SPEED * direction if i == axis else 0 for i in range(dim))
        acc = tuple(-direction if i == axis else 0 for i in range(dim))
        return vel, acc
    # bounce: constant speed aimed so a wall interaction is reachable
    speed = rng.draw_range(1, MAX_SPEED)
    vel = tuple(speed * direction if i == axis else 0 for i in range(dim))
    return vel, zeros


def _draw_bystander(dim: int, rng: RngStream) -> tuple[tuple, tuple]:
    vel = tuple(rng.draw_range(-1, 1) for _ in range(dim))
    return vel, (0,) * dim


def _draw_collision_pair(sizes: tuple[int, ...], rng: RngStream) -> list[tuple[tuple, tuple]]:
    """Two bodies on one line, aimed so they meet within three steps."""
    dim = len(sizes)
    axis = rng.draw_range(0, dim - 1)
    # At closing speed 2 the meeting happens at step ceil(gap / 2) <= 3;
    # even gaps meet in one cell, odd gaps swap through each other.
    gap = rng.draw_range(1, min(6, sizes[axis] - 1))
    line = [rng.draw_range(0, sizes[i] - 1) for i in range(dim)]
    start = rng.draw_range(0, sizes[axis] - 1 - gap)
    placements = []
    for coord, direction in ((start, 1), (start + gap, -1)):
        pos = list(line)
        pos[axis] = coord
        vel = tuple(direction if i == axis else 0 for i in range(dim))
        placements.append(((tuple(pos)), vel))
    return placements


def _events_admissible(flavour: str, events: list[StepEvents]) -> bool:
    reflections = [r for e in events for r in e.reflections]
    collisions = [c for e in events for c in e.collisions]
    if flavour == "bounce":
        return not collisions and reflections != [] and all(r[0] == 0 for r in reflections)
    if flavour == "collision":
        return not reflections and (0, 1) in collisions
    return not reflections and not collisions


def _frames_prompt(grids: list[Grid]) -> str:
    return (FRAME_SEPARATOR + "\n").join(render(g) for g in grids) + QUESTION_LINE


def generate_physics(dim: Dimension, rng: RngStream, *, seed: int,
                     config: PhysicsConfig = DEFAULT_CONFIG) -> Puzzle:
    """Draw a world whose dynamics show exactly one flavour of behaviour."""
    palette = config.palette.foreground_set
    for _ in range(1000):
        background = rng.choice(BACKGROUND_CHARS)
        sizes = tuple(
            rng.draw_range(lo, hi) for lo, hi in config.extent_ranges[int(dim)]
        )
        flavour = rng.choice(config.flavours)
        total = 1
        for size in sizes:
            total *= size

        if flavour == "collision":
            placements = _draw_collision_pair(sizes, rng)
            positions = [p for p, _ in placements]
            if len(set(positions)) != 2:
                continue
            kinematics = [(vel, (0,) * len(sizes)) for _, vel in placements]
        else:
            count = rng.draw_range(*config.body_counts)
            cells = rng.sample_distinct(0, total - 1, count)
            positions = [_cell_coords(c, sizes) for c in cells]
            kinematics = [_draw_subject(flavour, sizes, rng)]
            kinematics += [_draw_bystander(len(sizes), rng) for _ in range(count - 1)]

        glyphs = [palette[i] for i in rng.sample_distinct(0, len(palette) - 1, len(positions))]
        bodies = tuple(
            Body(glyph, pos, vel, acc)
            for glyph, pos, (vel, acc) in zip(glyphs, positions, kinematics)
        )
        extents = (sizes + (1, 1))[:3]
        world = World(extents, bodies, background)

        states = [world]
        events: list[StepEvents] = []
        try:
            for _ in range(config.shown_frames):
                nxt, evt = step_with_events(states[-1])
                states.append(nxt)
                events.append(evt)
        except UnresolvableCollision:
            continue
        if not _events_admissible(flavour, events):
            continue

        shown = [world_to_grid(s) for s in states[: config.shown_frames]]
        solution = render(world_to_grid(states[config.shown_frames]))
        meta = {
            "flavour": flavour,
            "bodies": json.dumps(
                [
                    {
                        "glyph": b.glyph,
                        "pos": list(b.position),
                        "vel": list(b.velocity),
                        "acc": list(b.acceleration),
                    }
                    for b in world.bodies
                ],
                sort_keys=True,
            ),
            "grid": "x".join(str(v) for v in extents),
            "background": background,
        }
        return build_puzzle(
            Category.PHYSICS, dim, seed, _frames_prompt(shown), solution, meta
        )
    raise GenerationError("could not draw an admissible physics scenario")


def variation_axes(dim: Dimension, config: PhysicsConfig = DEFAULT_CONFIG) -> tuple[tuple[str, int], ...]:
    """Independent choice axes of the physics generator at one dimension."""
    ranges = config.extent_ranges[int(dim)]
    extent_combos = 1
    min_cells = 1
    for lo, hi in ranges:
        extent_combos *= hi - lo + 1
        min_cells *= lo
    lo_count, hi_count = config.body_counts
    return (
        ("background", len(BACKGROUND_CHARS)),
        ("extent", extent_combos),
        ("flavour", len(config.flavours)),
        ("body_count", hi_count - lo_count + 1),
        ("subject_glyph", len(config.palette.foreground_set)),
        ("subject_cell", min_cells),
        ("velocity", (2 * MAX_SPEED + 1) ** int(dim)),
        ("acceleration", 3 ** int(dim)),
    )
