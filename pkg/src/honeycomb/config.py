"""Dot configurations and the honeycomb-array properties."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .hexgrid import (
    SYMMETRIES,
    Cell,
    Region,
    Symmetry,
    hex_distance,
    lee_sphere,
    region_contains,
    sort_key,
    staircase,
)

Permutation = tuple[int, ...]


class TheoremViolation(AssertionError):
    """A configuration contradicted a proven structural result.

    Raised only on internal inconsistency; a correct implementation never
    raises it.
    """


class DotConfiguration:
    """An immutable finite set of dots, translated so min row = min col = 0.

    Dots are kept sorted by ``(row, col)``, so two configurations are equal
    exactly when they are translates of each other.
    """

    __slots__ = ("dots",)

    def __init__(self, cells: Iterable[Sequence[int]] = ()):
        raw = [Cell(int(c[0]), int(c[1])) for c in cells]
        if len(set(raw)) != len(raw):
            dup = next(c for c, k in Counter(raw).items() if k > 1)
            raise ValueError(f"duplicate dot at ({dup.col}, {dup.row})")
        if raw:
            c0 = min(c.col for c in raw)
            r0 = min(c.row for c in raw)
            raw = [Cell(c.col - c0, c.row - r0) for c in raw]
        object.__setattr__(self, "dots", tuple(sorted(raw, key=sort_key)))

    def __setattr__(self, name, value):
        raise AttributeError("DotConfiguration is immutable")

    @classmethod
    def from_permutation(cls, p: Sequence[int]) -> "DotConfiguration":
        """Dots ``(col=i, row=p[i])``."""
        return cls(Cell(i, v) for i, v in enumerate(p))

    @property
    def n(self) -> int:
        return len(self.dots)

    def __len__(self) -> int:
        return len(self.dots)

    def __iter__(self):
        return iter(self.dots)

    def __contains__(self, x) -> bool:
        return x in self.dots

    def __eq__(self, other) -> bool:
        if not isinstance(other, DotConfiguration):
            return NotImplemented
        return self.dots == other.dots

    def __hash__(self) -> int:
        return hash(self.dots)

    def key(self) -> tuple[tuple[int, int], ...]:
        """Lexicographic comparison key on ``(row, col)`` pairs."""
        return tuple((c.row, c.col) for c in self.dots)

    def __lt__(self, other: "DotConfiguration") -> bool:
        return (self.n, self.key()) < (other.n, other.key())

    def __repr__(self) -> str:
        body = ", ".join(f"({c.col},{c.row})" for c in self.dots)
        return f"DotConfiguration({{{body}}})"

    def transformed(self, g: Symmetry) -> "DotConfiguration":
        return DotConfiguration(g(x) for x in self.dots)

    def to_permutation(self) -> Permutation | None:
        """One-line form if the dots are one per row and column of an n x n square."""
        n = self.n
        p = [-1] * n
        for c in self.dots:
            if c.col >= n or c.row >= n or p[c.col] != -1:
                return None
            p[c.col] = c.row
        if sorted(p) != list(range(n)):
            return None
        return tuple(p)


@dataclass(frozen=True)
class HoneycombArray:
    base: DotConfiguration
    radius: int
    center: Cell

    def __post_init__(self):
        if self.base.n != 2 * self.radius + 1:
            raise ValueError(f"radius {self.radius} needs {2 * self.radius + 1} dots, got {self.base.n}")
        if not region_contains(lee_sphere(self.center, self.radius), self.base):
            raise ValueError("dots are not inside the stated Lee sphere")

    def sort_key(self):
        return self.base.key()


def validate_permutation(p: Sequence[int]) -> Permutation:
    p = tuple(int(v) for v in p)
    n = len(p)
    seen = [False] * n
    for v in p:
        if not 0 <= v < n or seen[v]:
            raise ValueError(f"{list(p)} is not a permutation of 0..{n - 1}")
        seen[v] = True
    return p


def _line_spans(cfg: DotConfiguration):
    rows = [c.row for c in cfg.dots]
    cols = [c.col for c in cfg.dots]
    diags = [c.col - c.row for c in cfg.dots]
    return rows, cols, diags


def _consecutive_distinct(values: list[int]) -> bool:
    return len(set(values)) == len(values) and max(values) - min(values) == len(values) - 1


def hexagonal_permutation_index(cfg: DotConfiguration) -> int | None:
    """Staircase index ``i`` such that ``cfg`` fits ``S_i(n)``, or None.

    ``None`` means the dots do not occupy ``n`` consecutive lines, one dot
    per line, in every one of the three line directions.
    """
    if cfg.n == 0:
        raise ValueError("empty configuration")
    rows, cols, diags = _line_spans(cfg)
    if not (_consecutive_distinct(rows) and _consecutive_distinct(cols) and _consecutive_distinct(diags)):
        return None
    return max(diags) - (min(cols) - min(rows))


def is_hexagonal_permutation(cfg: DotConfiguration) -> bool:
    return hexagonal_permutation_index(cfg) is not None


def is_distinct_difference(cfg: DotConfiguration) -> bool:
    """All ordered difference vectors between distinct dots are different.

    Differences are compared in square coordinates. The square-grid
    representation is a linear bijection of the hexagonal lattice, so this
    agrees with comparing hexagonal difference vectors.
    """
    seen = set()
    dots = cfg.dots
    for a in range(len(dots)):
        ca, ra = dots[a]
        for b in range(len(dots)):
            if a == b:
                continue
            d = (ca - dots[b][0], ra - dots[b][1])
            if d in seen:
                return False
            seen.add(d)
    return True


def honeycomb_radius(cfg: DotConfiguration) -> tuple[int, Cell] | None:
    """``(radius, centre)`` when ``cfg`` is a honeycomb array, else None.

    Any hexagonal permutation has an odd number of dots and lies in the Lee
    sphere of radius ``(n-1)/2`` about the centre of its bounding square;
    a counterexample raises :class:`TheoremViolation`.
    """
    if cfg.n == 0:
        return None
    index = hexagonal_permutation_index(cfg)
    if index is None or not is_distinct_difference(cfg):
        return None
    n = cfg.n
    if n % 2 == 0 or index != (n - 1) // 2:
        raise TheoremViolation(f"hexagonal permutation with n={n} has staircase index {index}")
    r = (n - 1) // 2
    center = Cell(r, r)  # translation normal form puts the bounding square at the origin
    if any(hex_distance(x, center) > r for x in cfg.dots):
        raise TheoremViolation(f"{cfg!r} is not inside the radius-{r} Lee sphere at {center}")
    return r, center


def as_honeycomb(cfg: DotConfiguration) -> HoneycombArray | None:
    found = honeycomb_radius(cfg)
    if found is None:
        return None
    return HoneycombArray(cfg, *found)


def bounding_region(cfg: DotConfiguration) -> Region:
    """The staircase cut out by the rows, columns and diagonals holding dots."""
    index = hexagonal_permutation_index(cfg)
    if index is None:
        raise ValueError(f"{cfg!r} is not a hexagonal permutation")
    return staircase(index, cfg.n, Cell(0, 0))


def canonicalize(cfg: DotConfiguration) -> DotConfiguration:
    """Smallest image of ``cfg`` under the 12 grid symmetries (mod translation)."""
    return min((cfg.transformed(g) for g in SYMMETRIES), key=DotConfiguration.key)


def stabilizer(cfg: DotConfiguration) -> tuple[Symmetry, ...]:
    return tuple(g for g in SYMMETRIES if cfg.transformed(g) == cfg)


def automorphism_group_order(cfg: DotConfiguration) -> int:
    return len(stabilizer(cfg))


def orbit(cfg: DotConfiguration) -> frozenset[DotConfiguration]:
    return frozenset(cfg.transformed(g) for g in SYMMETRIES)
