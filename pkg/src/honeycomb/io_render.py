"""Reading and writing dot files, Costas database lines, ASCII and SVG pictures.

Dot file format (``hexdots 1``)::

    # optional comments
    hexdots 1
    region lee 1 1 1          # optional, at most one, before the dots
    0 1
    1 0
    2 2

Each dot line is ``col row``. Region lines are ``region lee CCOL CROW R``,
``region tricentred ACOL AROW R ORIENTATION``, ``region staircase I N ACOL
AROW`` or ``region triangle W ACOL AROW``, in the same coordinates as the
dots.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from xml.sax.saxutils import escape

from .config import DotConfiguration, Permutation
from .hexgrid import Cell, Region, make_region, region_contains, sort_key

HEADER = "hexdots 1"


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class DotFileDocument:
    config: DotConfiguration
    region: Region | None = None
    version: int = 1


# -- dot files ----------------------------------------------------------------


def _region_from_tokens(tokens: list[str], lineno: int) -> Region:
    kind, *rest = tokens
    try:
        v = [int(t) for t in rest]
    except ValueError:
        raise FormatError(f"non-integer region parameter in {' '.join(tokens)!r}", lineno) from None
    arity = {"lee": 3, "tricentred": 4, "staircase": 4, "triangle": 3}
    if kind not in arity:
        raise FormatError(f"unknown region kind {kind!r}", lineno)
    if len(v) != arity[kind]:
        raise FormatError(f"region {kind} takes {arity[kind]} integers, got {len(v)}", lineno)
    try:
        if kind == "lee":
            return make_region("lee", Cell(v[0], v[1]), v[2])
        if kind == "tricentred":
            return make_region("tricentred", Cell(v[0], v[1]), v[2], v[3])
        if kind == "staircase":
            return make_region("staircase", v[0], v[1], Cell(v[2], v[3]))
        return make_region("triangle", v[0], Cell(v[1], v[2]))
    except ValueError as exc:
        raise FormatError(str(exc), lineno) from None


def _region_tokens(region: Region) -> str:
    p = region.params
    if region.kind == "lee":
        return f"lee {p[0].col} {p[0].row} {p[1]}"
    if region.kind == "tricentred":
        return f"tricentred {p[0].col} {p[0].row} {p[1]} {p[2]}"
    if region.kind == "staircase":
        return f"staircase {p[0]} {p[1]} {p[2].col} {p[2].row}"
    if region.kind == "triangle":
        return f"triangle {p[0]} {p[1].col} {p[1].row}"
    raise FormatError(f"region kind {region.kind!r} cannot be written to a dot file")


def parse_document(text: str) -> DotFileDocument:
    header_seen = False
    region = None
    raw: list[Cell] = []
    seen: dict[Cell, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if not header_seen:
            if stripped.split() != HEADER.split():
                raise FormatError(f"expected header {HEADER!r}, got {stripped!r}", lineno)
            header_seen = True
            continue
        tokens = stripped.split()
        if tokens[0] == "region":
            if region is not None:
                raise FormatError("more than one region line", lineno)
            if raw:
                raise FormatError("region line must come before the dots", lineno)
            if len(tokens) < 2:
                raise FormatError("region line without a kind", lineno)
            region = _region_from_tokens(tokens[1:], lineno)
            continue
        if len(tokens) != 2:
            raise FormatError(f"expected 'col row', got {stripped!r}", lineno)
        if not all(re.fullmatch(r"[+-]?\d+", t) for t in tokens):
            raise FormatError(f"non-integer coordinate in {stripped!r}", lineno)
        cell = Cell(int(tokens[0]), int(tokens[1]))
        if cell in seen:
            raise FormatError(f"duplicate dot ({cell.col}, {cell.row}), first on line {seen[cell]}", lineno)
        seen[cell] = lineno
        raw.append(cell)
    if not header_seen:
        raise FormatError(f"missing {HEADER!r} header")
    cfg = DotConfiguration(raw)
    if region is not None and raw:
        shift = Cell(-min(c.col for c in raw), -min(c.row for c in raw))
        region = region.translated(shift)
    return DotFileDocument(cfg, region)


def parse_dots(text: str) -> DotConfiguration:
    return parse_document(text).config


def write_document(doc: DotFileDocument) -> str:
    lines = [HEADER]
    if doc.region is not None:
        lines.append("region " + _region_tokens(doc.region))
    lines += [f"{c.col} {c.row}" for c in doc.config.dots]
    return "\n".join(lines) + "\n"


def write_dots(cfg: DotConfiguration, region: Region | None = None) -> str:
    return write_document(DotFileDocument(cfg, region))


# -- Costas database lines ----------------------------------------------------


@dataclass(frozen=True)
class CostasDbRecord:
    n: int
    permutation: Permutation  # always 0-based
    base: int = 1


def parse_costas_line(line: str, base: int = 1) -> CostasDbRecord:
    """One permutation per line, values separated by whitespace and/or commas."""
    if base not in (0, 1):
        raise ValueError(f"base must be 0 or 1, got {base}")
    tokens = [t for t in re.split(r"[\s,]+", line.strip()) if t]
    if not tokens:
        raise ValueError("empty permutation line")
    try:
        values = [int(t) - base for t in tokens]
    except ValueError:
        raise ValueError(f"non-integer entry in {line.strip()!r}") from None
    n = len(values)
    counts = [0] * n
    for v in values:
        if not 0 <= v < n:
            raise ValueError(f"value {v + base} outside {base}..{n - 1 + base}")
        counts[v] += 1
    for v, k in enumerate(counts):
        if k > 1:
            raise ValueError(f"not a permutation: {v + base} repeated")
    # n values in range with no repeats is a bijection
    return CostasDbRecord(n, tuple(values), base)


def format_costas_line(p, base: int = 1, sep: str = " ") -> str:
    return sep.join(str(v + base) for v in p)


# -- pictures -----------------------------------------------------------------


def _check_region(cfg: DotConfiguration, region: Region | None) -> None:
    if region is not None and not region_contains(region, cfg):
        raise ValueError("region does not contain every dot")


def render_ascii(cfg: DotConfiguration, region: Region | None = None, layout: str = "hex") -> str:
    """Text picture: ``o`` for a dot, ``.`` for an empty region cell.

    ``layout="hex"`` staggers rows by half a cell so that the six neighbours
    sit around each hexagon; ``layout="square"`` draws the square-grid
    representation directly. Either way each cell takes two characters and
    North is up.
    """
    if layout not in ("hex", "square"):
        raise ValueError(f"unknown layout {layout!r}")
    _check_region(cfg, region)
    cells = set(cfg.dots) | (set(region.cells) if region is not None else set())
    if not cells:
        return ""
    dots = set(cfg.dots)

    def x_of(c: Cell) -> int:
        return 2 * c.col - c.row if layout == "hex" else 2 * c.col

    x0 = min(x_of(c) for c in cells)
    rows = sorted({c.row for c in cells}, reverse=True)
    lines = []
    for row in range(rows[0], rows[-1] - 1, -1):
        line = [" "] * (max(x_of(c) for c in cells) - x0 + 1)
        for c in cells:
            if c.row == row:
                line[x_of(c) - x0] = "o" if c in dots else "."
        lines.append("".join(line).rstrip())
    if layout == "hex":
        legend = "# rows: horizontal; columns: up-left to down-right; diagonals: down-left to up-right"
    else:
        legend = "# rows: horizontal; columns: vertical; diagonals: North-East to South-West"
    return "\n".join(lines + [legend]) + "\n"


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def render_svg(cfg: DotConfiguration, region: Region | None = None, size: float = 10.0) -> str:
    """SVG 1.1 picture with flat-top hexagons of circumradius ``size``.

    Standard diagonals run vertically; rows and columns run at 30 degrees
    either side of horizontal.
    """
    _check_region(cfg, region)
    dots = set(cfg.dots)
    cells = sorted(dots | (set(region.cells) if region is not None else set()), key=sort_key)
    h = math.sqrt(3) / 2 * size

    def centre(c: Cell) -> tuple[float, float]:
        return 1.5 * size * (c.col - c.row), -h * (c.col + c.row)

    centres = [centre(c) for c in cells]
    margin = size + 2.0
    if centres:
        min_x = min(x for x, _ in centres) - margin
        min_y = min(y for _, y in centres) - margin
        width = max(x for x, _ in centres) - min_x + margin
        height = max(y for _, y in centres) - min_y + margin
    else:
        min_x = min_y = 0.0
        width = height = 2 * margin
    region_cells = set(region.cells) if region is not None else set()

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" height="{_f(height)}"'
        f' viewBox="0.000 0.000 {_f(width)} {_f(height)}">',
        f"<title>{escape(f'{len(dots)} dots')}</title>",
    ]
    for c, (x, y) in zip(cells, centres):
        cx, cy = x - min_x, y - min_y
        pts = " ".join(
            f"{_f(cx + size * math.cos(math.radians(60 * k)))},{_f(cy + size * math.sin(math.radians(60 * k)))}"
            for k in range(6)
        )
        stroke = "#000000" if c in region_cells else "#999999"
        out.append(
            f'<polygon class="cell" data-col="{c.col}" data-row="{c.row}" points="{pts}"'
            f' fill="none" stroke="{stroke}" stroke-width="1.000"/>'
        )
        if c in dots:
            out.append(
                f'<circle class="dot" data-col="{c.col}" data-row="{c.row}" cx="{_f(cx)}" cy="{_f(cy)}"'
                f' r="{_f(0.45 * size)}" fill="#000000"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
