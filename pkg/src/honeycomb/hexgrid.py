"""Hexagonal grid in its square-grid representation.

A hexagon is addressed by a square-grid cell ``(col, row)``: columns grow East,
rows grow North. Each cell touches the four edge-neighbours plus the cells at
its North-East ``(+1, +1)`` and South-West ``(-1, -1)`` corners, which gives the
six hexagonal neighbours. The three hexagonal line directions become rows,
columns and *standard diagonals* ``col - row = const``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class Cell(NamedTuple):
    col: int
    row: int

    @property
    def diag(self) -> int:
        return self.col - self.row

    def __add__(self, other):  # type: ignore[override]
        return Cell(self.col + other[0], self.row + other[1])

    def __sub__(self, other):
        return Cell(self.col - other[0], self.row - other[1])

    def __neg__(self):
        return Cell(-self.col, -self.row)


ORIGIN = Cell(0, 0)

NEIGHBOUR_OFFSETS = (
    Cell(1, 0),
    Cell(-1, 0),
    Cell(0, 1),
    Cell(0, -1),
    Cell(1, 1),
    Cell(-1, -1),
)


def neighbours(x: Cell) -> tuple[Cell, ...]:
    return tuple(Cell(x.col + d.col, x.row + d.row) for d in NEIGHBOUR_OFFSETS)


def hex_distance(a: Cell, b: Cell) -> int:
    """Number of steps between two hexagons along adjacent hexagons."""
    d1 = a[0] - b[0]
    d2 = a[1] - b[1]
    if d1 * d2 >= 0:
        return max(abs(d1), abs(d2))
    return abs(d1) + abs(d2)


def line_indices(x: Cell) -> tuple[int, int, int]:
    """``(row, col, diag)`` indices of the three lines through ``x``."""
    return x[1], x[0], x[0] - x[1]


def sort_key(x: Cell) -> tuple[int, int]:
    return x[1], x[0]


def sorted_cells(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    return tuple(sorted((Cell(*c) for c in cells), key=sort_key))


# -- regions ------------------------------------------------------------------

REGION_KINDS = ("lee", "tricentred", "staircase", "triangle", "custom")


@dataclass(frozen=True)
class Region:
    """A named finite set of cells.

    ``params`` holds the constructor arguments for the kind (used for
    serialization); ``cells`` is sorted by ``(row, col)``.
    """

    kind: str
    params: tuple
    cells: tuple[Cell, ...]
    _members: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.cells))

    def __contains__(self, x) -> bool:
        return x in self._members

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    def line_counts(self) -> tuple[int, int, int]:
        """How many distinct rows, columns and standard diagonals meet the region."""
        rows = {c.row for c in self.cells}
        cols = {c.col for c in self.cells}
        diags = {c.col - c.row for c in self.cells}
        return len(rows), len(cols), len(diags)

    def translated(self, offset: Cell) -> "Region":
        offset = Cell(*offset)
        cells = tuple(c + offset for c in self.cells)
        if self.kind == "custom":
            return Region("custom", (), cells)
        return make_region(self.kind, *_shift_params(self.kind, self.params, offset))


def _shift_params(kind: str, params: tuple, offset: Cell) -> tuple:
    if kind == "lee":
        center, r = params
        return (center + offset, r)
    if kind == "tricentred":
        anchor, r, orientation = params
        return (anchor + offset, r, orientation)
    if kind == "staircase":
        i, n, anchor = params
        return (i, n, anchor + offset)
    if kind == "triangle":
        w, anchor = params
        return (w, anchor + offset)
    raise ValueError(f"unknown region kind {kind!r}")


def lee_sphere(center: Cell = ORIGIN, r: int = 0) -> Region:
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    center = Cell(*center)
    cells = []
    for dr in range(-r, r + 1):
        # |dc - dr| <= r together with |dc|, |dr| <= r
        for dc in range(max(-r, dr - r), min(r, dr + r) + 1):
            cells.append(Cell(center.col + dc, center.row + dr))
    return Region("lee", (center, r), sorted_cells(cells))


def tricentred_lee_sphere(anchor: Cell = ORIGIN, r: int = 0, orientation: int = 0) -> Region:
    """Union of three radius-``r`` Lee spheres with pairwise adjacent centres.

    Orientation 0 uses centres ``anchor``, ``anchor + (1, 0)``, ``anchor + (1, 1)``;
    orientation 1 uses ``anchor``, ``anchor + (1, 1)``, ``anchor + (0, 1)``.
    """
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    if orientation not in (0, 1):
        raise ValueError(f"orientation must be 0 or 1, got {orientation}")
    anchor = Cell(*anchor)
    third = Cell(1, 0) if orientation == 0 else Cell(0, 1)
    cells: set[Cell] = set()
    for centre in (anchor, anchor + Cell(1, 1), anchor + third):
        cells.update(lee_sphere(centre, r).cells)
    return Region("tricentred", (anchor, r, orientation), sorted_cells(cells))


def staircase(i: int, n: int, anchor: Cell = ORIGIN) -> Region:
    """The n x n square at ``anchor`` cut to the diagonals ``-(n-1-i) .. i``."""
    if n < 1:
        raise ValueError(f"staircase size must be positive, got {n}")
    if not 0 <= i <= n - 1:
        raise ValueError(f"staircase index must satisfy 0 <= i <= n-1, got i={i}, n={n}")
    anchor = Cell(*anchor)
    cells = [
        Cell(anchor.col + c, anchor.row + r)
        for r in range(n)
        for c in range(n)
        if -(n - 1 - i) <= c - r <= i
    ]
    return Region("staircase", (i, n, anchor), sorted_cells(cells))


def triangular_board(w: int, anchor: Cell = ORIGIN) -> Region:
    """Width-``w`` triangle: relative row ``k`` holds columns ``0..k``."""
    if w < 1:
        raise ValueError(f"board width must be positive, got {w}")
    anchor = Cell(*anchor)
    return Region("triangle", (w, anchor), staircase(0, w, anchor).cells)


def custom_region(cells: Iterable[Cell]) -> Region:
    return Region("custom", (), sorted_cells(set(Cell(*c) for c in cells)))


_BUILDERS = {
    "lee": lee_sphere,
    "tricentred": tricentred_lee_sphere,
    "staircase": staircase,
    "triangle": triangular_board,
    "custom": custom_region,
}


def make_region(kind: str, *args, **kwargs) -> Region:
    try:
        builder = _BUILDERS[kind]
    except KeyError:
        raise ValueError(f"unknown region kind {kind!r}; expected one of {REGION_KINDS}") from None
    return builder(*args, **kwargs)


def region_contains(reg: Region, cfg, offset: Cell = ORIGIN) -> bool:
    """True iff every dot of ``cfg`` shifted by ``offset`` lies in ``reg``."""
    dc, dr = offset
    return all(Cell(x[0] + dc, x[1] + dr) in reg for x in _dots_of(cfg))


def find_translate(reg: Region, cfg) -> Cell | None:
    """Smallest offset (by ``(row, col)``) placing all of ``cfg`` inside ``reg``."""
    dots = _dots_of(cfg)
    if not dots:
        return ORIGIN
    first = min(dots, key=sort_key)
    for target in reg.cells:
        offset = Cell(target.col - first[0], target.row - first[1])
        if region_contains(reg, dots, offset):
            return offset
    return None


def region_contains_translate(reg: Region, cfg) -> bool:
    return find_translate(reg, cfg) is not None


def _dots_of(cfg) -> tuple:
    return tuple(getattr(cfg, "dots", cfg))


# -- symmetries ---------------------------------------------------------------


@dataclass(frozen=True)
class Symmetry:
    """A point symmetry of the grid as an integer matrix acting on ``(col, row)``.

    Labels ``k`` in ``0..5`` stand for ``M**k``; ``6..11`` for ``M**(k-6) F``.
    """

    matrix: tuple[tuple[int, int], tuple[int, int]]
    label: int | None = None

    def __call__(self, x: Cell) -> Cell:
        (a, b), (c, d) = self.matrix
        return Cell(a * x[0] + b * x[1], c * x[0] + d * x[1])

    def __matmul__(self, other: "Symmetry") -> "Symmetry":
        """Composition: ``(g @ h)(x) == g(h(x))``."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        m = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return symmetry_from_matrix(m)

    def __pow__(self, k: int) -> "Symmetry":
        out = IDENTITY
        for _ in range(k % 12):
            out = out @ self
        return out

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.matrix
        return a * d - b * c


IDENTITY = Symmetry(((1, 0), (0, 1)), 0)
ROTATION = Symmetry(((1, -1), (1, 0)), 1)  # (c, r) -> (c - r, c), 60 degrees
REFLECTION = Symmetry(((0, 1), (1, 0)), 6)  # (c, r) -> (r, c)


def _matmul(m, n):
    (a, b), (c, d) = m
    (e, f), (g, h) = n
    return ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))


def _build_group() -> tuple[Symmetry, ...]:
    powers = [IDENTITY.matrix]
    for _ in range(5):
        powers.append(_matmul(ROTATION.matrix, powers[-1]))
    elements = [Symmetry(m, k) for k, m in enumerate(powers)]
    elements += [Symmetry(_matmul(m, REFLECTION.matrix), 6 + k) for k, m in enumerate(powers)]
    return tuple(elements)


SYMMETRIES: tuple[Symmetry, ...] = _build_group()
_BY_MATRIX = {g.matrix: g for g in SYMMETRIES}

# fixes a Lee sphere centred at the origin together with its three corner axes
HEX_SPHERE_SUBGROUP: tuple[Symmetry, ...] = tuple(SYMMETRIES[k] for k in (0, 2, 4, 6, 8, 10))


def symmetry_from_matrix(m) -> Symmetry:
    m = (tuple(m[0]), tuple(m[1]))
    try:
        return _BY_MATRIX[m]
    except KeyError:
        raise ValueError(f"{m} is not a symmetry of the hexagonal grid") from None


def symmetry(label: int) -> Symmetry:
    return SYMMETRIES[label]


def apply_symmetry(g: Symmetry, obj):
    """Image of a cell, or of anything carrying ``dots``, under ``g``.

    Configurations come back translation-normalized by their own constructor.
    """
    if isinstance(obj, tuple) and len(obj) == 2 and all(isinstance(v, int) for v in obj):
        return g(obj)
    if hasattr(obj, "dots"):
        return type(obj)(g(x) for x in obj.dots)
    return tuple(g(x) for x in obj)
