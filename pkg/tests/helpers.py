"""Shared test utilities: prompt dissection and random grid/world builders."""

from __future__ import annotations

import random

from enigme.physics import Body, World
from enigme.sequence import FRAME_SEPARATOR, QUESTION_LINE
from enigme.textgrid import BACKGROUND_CHARS, FOREGROUND_CHARS, Grid, parse


def split_frames(prompt: str, background: str) -> list[Grid]:
    """Parse the shown frames out of a sequence/physics prompt."""
    assert prompt.endswith(QUESTION_LINE)
    body = prompt[: -len(QUESTION_LINE)]
    return [parse(part, background) for part in body.split(FRAME_SEPARATOR + "\n")]


def random_grid(rnd: random.Random) -> Grid:
    """Arbitrary palette-conformant grid of 1 to 3 dimensions."""
    dim = rnd.randint(1, 3)
    if dim == 1:
        w, h, d = rnd.randint(1, 20), 1, 1
    elif dim == 2:
        w, h, d = rnd.randint(1, 12), rnd.randint(2, 12), 1
    else:
        w, h, d = rnd.randint(1, 6), rnd.randint(1, 6), rnd.randint(2, 5)
    background = rnd.choice(BACKGROUND_CHARS)
    cells = [
        rnd.choice(FOREGROUND_CHARS) if rnd.random() < 0.3 else background
        for _ in range(w * h * d)
    ]
    return Grid.from_cells(w, h, d, cells, background)


def random_world(rnd: random.Random, dim: int) -> World:
    """Arbitrary valid world for oracle agreement checks."""
    if dim == 1:
        sizes = (rnd.randint(4, 14),)
    else:
        sizes = (rnd.randint(4, 9), rnd.randint(4, 9))
    extents = (sizes + (1, 1))[:3]
    count = rnd.randint(1, 3)
    total = 1
    for s in sizes:
        total *= s
    flat = rnd.sample(range(total), count)
    positions = []
    for cell in flat:
        coords = []
        for s in sizes:
            coords.append(cell % s)
            cell //= s
        positions.append(tuple(coords))
    glyphs = rnd.sample(FOREGROUND_CHARS, count)
    bodies = tuple(
        Body(
            glyphs[i],
            positions[i],
            tuple(rnd.randint(-2, 2) for _ in sizes),
            tuple(rnd.randint(-1, 1) for _ in sizes),
        )
        for i in range(count)
    )
    return World(extents, bodies, rnd.choice(BACKGROUND_CHARS))
