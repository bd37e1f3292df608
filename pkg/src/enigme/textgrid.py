"""Character grids in 1 to 3 dimensions with a canonical text form.

The text form is the wire format for sequence and physics puzzles:
1-D grids are one line, 2-D grids are height lines of width characters,
3-D grids are depth slices, each introduced by a "slice k" header line and
separated by a single blank line.  render and parse are exact inverses.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .model import ContractViolation, GridFormatError

BACKGROUND_CHARS = ".,_'`"
FOREGROUND_CHARS = string.ascii_uppercase + string.digits + "#@"

_SLICE_PREFIX = "slice "


@dataclass(frozen=True)
class CharPalette:
    """Background fillers plus the 38-character foreground set."""

    background_set: str = BACKGROUND_CHARS
    foreground_set: str = FOREGROUND_CHARS

    def __post_init__(self):
        if len(set(self.foreground_set)) != 38:
            raise ContractViolation("foreground set must hold exactly 38 distinct characters")
        if set(self.foreground_set) & set(self.background_set):
            raise ContractViolation("foreground and background sets overlap")


DEFAULT_PALETTE = CharPalette()


@dataclass(frozen=True)
class Grid:
    """Dense row-major character grid; unused axes have extent 1.

    Origin is the top-left of the first slice; y grows downward, z walks
    through slices.  Cells are stored as one string of length w*h*d.
    """

    width: int
    height: int
    depth: int
    cells: str
    background: str

    def __post_init__(self):
        if min(self.width, self.height, self.depth) < 1:
            raise ContractViolation("grid extents must be >= 1")
        if len(self.cells) != self.width * self.height * self.depth:
            raise ContractViolation("cell count does not match extents")
        if self.background not in BACKGROUND_CHARS:
            raise ContractViolation(f"background {self.background!r} not in {BACKGROUND_CHARS!r}")
        for ch in self.cells:
            if not 0x20 <= ord(ch) <= 0x7E:
                raise ContractViolation(f"non-printable cell {ch!r}")

    @classmethod
    def filled(cls, width: int, height: int, depth: int, background: str) -> "Grid":
        return cls(width, height, depth, background * (width * height * depth), background)

    @classmethod
    def from_cells(cls, width: int, height: int, depth: int,
                   cells: list[str], background: str) -> "Grid":
        return cls(width, height, depth, "".join(cells), background)

    @property
    def extents(self) -> tuple[int, int, int]:
        return (self.width, self.height, self.depth)

    @property
    def dimension(self) -> int:
        if self.depth > 1:
            return 3
        if self.height > 1:
            return 2
        return 1

    def index(self, x: int, y: int = 0, z: int = 0) -> int:
        return x + self.width * (y + self.height * z)

    def get(self, x: int, y: int = 0, z: int = 0) -> str:
        return self.cells[self.index(x, y, z)]

    def coords(self):
        """All (x, y, z) in row-major order."""
        for z in range(self.depth):
            for y in range(self.height):
                for x in range(self.width):
                    yield (x, y, z)


def render(grid: Grid) -> str:
    """Canonical text form; every line ends with a newline, none carry trailing spaces."""
    w, h, d = grid.extents
    rows = []
    for z in range(d):
        if d > 1:
            if z > 0:
                rows.append("")
            rows.append(f"{_SLICE_PREFIX}{z}")
        base = w * h * z
        for y in range(h):
            rows.append(grid.cells[base + w * y: base + w * (y + 1)])
    return "".join(line + "\n" for line in rows)


def _parse_rows(lines: list[str]) -> tuple[int, int, str]:
    width = len(lines[0])
    for line in lines:
        if len(line) != width:
            raise GridFormatError("ragged lines: all rows of a grid must share one width")
        for ch in line:
            if not 0x20 <= ord(ch) <= 0x7E:
                raise GridFormatError(f"non-printable character {ch!r}")
    return width, len(lines), "".join(lines)


def parse(text: str, background: str) -> Grid:
    """Exact inverse of render for the given background character."""
    if not text:
        raise GridFormatError("empty grid text")
    if not text.endswith("\n"):
        raise GridFormatError("grid text must end with a newline")
    lines = text.split("\n")[:-1]
    if not lines:
        raise GridFormatError("empty grid text")

    if not lines[0].startswith(_SLICE_PREFIX):
        width, height, cells = _parse_rows(lines)
        if height == 1:
            return Grid(width, 1, 1, cells, background)
        return Grid(width, height, 1, cells, background)

    # Slice-per-slice 3-D layout.
    slices: list[list[str]] = []
    i = 0
    while i < len(lines):
        header = lines[i]
        if header != f"{_SLICE_PREFIX}{len(slices)}":
            raise GridFormatError(f"expected 'slice {len(slices)}' header, got {header!r}")
        i += 1
        body: list[str] = []
        while i < len(lines) and lines[i] != "":
            body.append(lines[i])
            i += 1
        if not body:
            raise GridFormatError("slice with no rows")
        slices.append(body)
        if i < len(lines):
            if lines[i] != "":
                raise GridFormatError("slices must be separated by one blank line")
            i += 1
            if i == len(lines):
                raise GridFormatError("trailing blank line after last slice")

    width, height, _ = _parse_rows(slices[0])
    cells = []
    for body in slices:
        sw, sh, flat = _parse_rows(body)
        if (sw, sh) != (width, height):
            raise GridFormatError("inconsistent slice extents")
        cells.append(flat)
    return Grid(width, height, len(slices), "".join(cells), background)
