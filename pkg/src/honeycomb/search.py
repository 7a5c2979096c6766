"""Exact enumerators: Costas arrays, hexagonal permutations, honeycomb arrays, brooks.

Permutation searches are split into independent tasks by fixing the first
``SPLIT_DEPTH`` values; tasks run on a thread pool (the compiled kernels
release the GIL) and are merged in task order, so every result is
independent of the worker count.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .config import (
    DotConfiguration,
    HoneycombArray,
    Permutation,
    TheoremViolation,
    as_honeycomb,
    canonicalize,
    honeycomb_radius,
    is_distinct_difference,
    validate_permutation,
)
from .hexgrid import HEX_SPHERE_SUBGROUP, Cell, lee_sphere, triangular_board
from .kernels import max_brooks_search, perm_search

SPLIT_DEPTH = 2
MAX_COSTAS_ORDER = 17
MAX_HEXPERM_DOTS = 19

_INITIAL_CAPACITY = 1024


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class CountResult:
    num_dots: int
    count: int
    elapsed: float
    nodes: int


@dataclass(frozen=True)
class BrooksResult:
    w: int
    k: int
    placement: tuple[Cell, ...]  # board coordinates, board anchored at (0, 0)
    nodes: int = 0

    @property
    def configuration(self) -> DotConfiguration:
        return DotConfiguration(self.placement)


@dataclass(frozen=True)
class GrowthRow:
    num_dots: int
    n: int
    h: int
    ratio: float


# -- task plumbing ------------------------------------------------------------


def _check_size(n: int, limit: int, what: str, guard: bool) -> None:
    if guard and n > limit:
        raise BudgetExceeded(f"{what} of size {n} exceeds the default limit {limit}; raise the node budget to run it")


def _prefixes(n: int) -> list[np.ndarray]:
    depth = min(SPLIT_DEPTH, n)
    return [np.array(t, dtype=np.int64) for t in itertools.permutations(range(n), depth)]


def _run_task(n, prefix, lo, use_diag, use_diff, collect, budget):
    out = np.empty((_INITIAL_CAPACITY if collect else 0, n), np.int64)
    count, nodes = perm_search(n, prefix, lo, use_diag, use_diff, out, budget)
    if nodes >= 0 and collect and count > out.shape[0]:
        out = np.empty((count, n), np.int64)
        count, nodes = perm_search(n, prefix, lo, use_diag, use_diff, out, budget)
    if nodes < 0:
        raise BudgetExceeded(f"search exceeded the node budget of {budget}")
    return count, nodes, (out[:count] if collect else None)


def _map(fn, items, workers: int):
    if workers <= 1 or len(items) <= 1:
        return map(fn, items)
    pool = ThreadPoolExecutor(max_workers=workers)
    try:
        return list(pool.map(fn, items))
    finally:
        pool.shutdown()


def _search(n, los, use_diag, use_diff, collect, workers, node_budget):
    """Yield ``(count, nodes, solutions)`` per task, in lexicographic task order."""
    budget = int(node_budget or 0)
    tasks = [(lo, prefix) for lo in los for prefix in _prefixes(n)]

    def run(task):
        lo, prefix = task
        return _run_task(n, prefix, lo, use_diag, use_diff, collect, budget)

    total = 0
    for result in _map(run, tasks, workers):
        total += result[1]
        if budget and total > budget:
            raise BudgetExceeded(f"search exceeded the node budget of {budget}")
        yield result


def _hex_windows(num_dots: int, theorem1_shortcut: bool) -> list[int]:
    """Lowest diagonal of each admissible window of ``num_dots`` consecutive diagonals."""
    if theorem1_shortcut:
        if num_dots % 2 == 0:
            return []
        return [-(num_dots - 1) // 2]
    return list(range(-(num_dots - 1), 1))


# -- Costas arrays ------------------------------------------------------------


def is_costas(p) -> bool:
    p = validate_permutation(p)
    return is_distinct_difference(DotConfiguration.from_permutation(p))


def enumerate_costas(
    n: int, workers: int = 1, guard: bool = True, node_budget: int | None = None
) -> Iterator[Permutation]:
    """Every Costas array of order ``n``, in lexicographic order of one-line notation."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    _check_size(n, MAX_COSTAS_ORDER, "Costas enumeration", guard)
    for _, _, sols in _search(n, [0], False, True, True, workers, node_budget):
        for row in sols:
            yield tuple(int(v) for v in row)


def count_costas(n: int, workers: int = 1, guard: bool = True, node_budget: int | None = None) -> CountResult:
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    _check_size(n, MAX_COSTAS_ORDER, "Costas enumeration", guard)
    t0 = time.perf_counter()
    count = nodes = 0
    for c, k, _ in _search(n, [0], False, True, False, workers, node_budget):
        count += c
        nodes += k
    return CountResult(n, count, time.perf_counter() - t0, nodes)


def costas_to_honeycomb(p) -> HoneycombArray | None:
    """The honeycomb array a Costas array maps to, if its diagonals are consecutive."""
    p = validate_permutation(p)
    cfg = DotConfiguration.from_permutation(p)
    if not is_distinct_difference(cfg):
        raise ValueError(f"{list(p)} is not a Costas array")
    diags = [i - v for i, v in enumerate(p)]
    quick = len(set(diags)) == len(diags) and max(diags) - min(diags) == len(p) - 1
    full = as_honeycomb(cfg)
    if quick != (full is not None):
        raise TheoremViolation(f"diagonal test and property check disagree on {list(p)}")
    return full


def _finish(arrays: list[HoneycombArray], up_to_symmetry: bool) -> list[HoneycombArray]:
    if up_to_symmetry:
        reps = {canonicalize(a.base) for a in arrays}
        arrays = [as_honeycomb(c) for c in reps]
    arrays = sorted(set(arrays), key=HoneycombArray.sort_key)
    for a in arrays:
        if a.base.n % 2 == 0:
            raise TheoremViolation(f"honeycomb array with an even number of dots: {a.base!r}")
    return arrays


def search_honeycomb(
    num_dots: int,
    up_to_symmetry: bool = False,
    workers: int = 1,
    method: str = "costas",
    theorem1_shortcut: bool = True,
    guard: bool = True,
    node_budget: int | None = None,
) -> list[HoneycombArray]:
    """All honeycomb arrays with ``num_dots`` dots.

    ``method="costas"`` enumerates every Costas array of that order and keeps
    those whose image is a honeycomb array. ``method="direct"`` runs one
    search with both the diagonal-window and the difference constraints
    active, which prunes far harder and gives the same answer.
    """
    if num_dots < 1:
        raise ValueError(f"number of dots must be positive, got {num_dots}")
    if theorem1_shortcut and num_dots % 2 == 0:
        return []
    if method == "costas":
        found = []
        for p in enumerate_costas(num_dots, workers=workers, guard=guard, node_budget=node_budget):
            a = costas_to_honeycomb(p)
            if a is not None:
                found.append(a)
    elif method == "direct":
        _check_size(num_dots, MAX_COSTAS_ORDER, "honeycomb search", guard)
        los = _hex_windows(num_dots, theorem1_shortcut)
        found = []
        for _, _, sols in _search(num_dots, los, True, True, True, workers, node_budget):
            for row in sols:
                a = as_honeycomb(DotConfiguration.from_permutation(row))
                if a is None:
                    raise TheoremViolation(f"kernel returned a non-honeycomb {row.tolist()}")
                found.append(a)
    else:
        raise ValueError(f"unknown method {method!r}")
    return _finish(found, up_to_symmetry)


# -- hexagonal permutations ---------------------------------------------------


def count_hex_permutations(
    num_dots: int,
    workers: int = 1,
    theorem1_shortcut: bool = True,
    guard: bool = True,
    node_budget: int | None = None,
) -> CountResult:
    """Number of hexagonal permutations with ``num_dots`` dots.

    With the shortcut on, only the centred diagonal window is searched and
    even sizes return 0 at once. With it off, every window of consecutive
    diagonals is searched, which independently confirms both facts.
    """
    if num_dots < 1:
        raise ValueError(f"number of dots must be positive, got {num_dots}")
    _check_size(num_dots, MAX_HEXPERM_DOTS, "hexagonal permutation count", guard)
    t0 = time.perf_counter()
    count = nodes = 0
    los = _hex_windows(num_dots, theorem1_shortcut)
    for c, k, _ in _search(num_dots, los, True, False, False, workers, node_budget):
        count += c
        nodes += k
    return CountResult(num_dots, count, time.perf_counter() - t0, nodes)


def enumerate_hex_permutations(
    num_dots: int,
    workers: int = 1,
    theorem1_shortcut: bool = True,
    guard: bool = True,
    node_budget: int | None = None,
) -> Iterator[DotConfiguration]:
    if num_dots < 1:
        raise ValueError(f"number of dots must be positive, got {num_dots}")
    _check_size(num_dots, MAX_HEXPERM_DOTS, "hexagonal permutation enumeration", guard)
    los = _hex_windows(num_dots, theorem1_shortcut)
    for _, _, sols in _search(num_dots, los, True, False, True, workers, node_budget):
        for row in sols:
            yield DotConfiguration.from_permutation(row)


def growth_report(
    max_dots: int, workers: int = 1, guard: bool = True, node_budget: int | None = None
) -> list[GrowthRow]:
    """``log(h) / (n log n)`` for ``2n - 1 = 1, 3, ..., max_dots``; the n = 1 ratio is 0."""
    if max_dots < 1:
        raise ValueError(f"max_dots must be positive, got {max_dots}")
    _check_size(max_dots, MAX_HEXPERM_DOTS, "growth report", guard)
    rows = []
    for num_dots in range(1, max_dots + 1, 2):
        n = (num_dots + 1) // 2
        h = count_hex_permutations(num_dots, workers=workers, guard=guard, node_budget=node_budget).count
        ratio = 0.0 if n == 1 else math.log(h) / (n * math.log(n))
        rows.append(GrowthRow(num_dots, n, h, ratio))
    return rows


# -- brooks -------------------------------------------------------------------


def max_brooks(w: int) -> BrooksResult:
    """Maximum number of non-attacking brooks on the width-``w`` triangular board."""
    if w < 1:
        raise ValueError(f"board width must be positive, got {w}")
    best, cols, nodes = max_brooks_search(w)
    placement = tuple(Cell(int(c), row) for row, c in enumerate(cols) if c >= 0)
    _check_brooks(w, placement)
    return BrooksResult(w, int(best), placement, int(nodes))


def _check_brooks(w: int, placement) -> None:
    board = triangular_board(w)
    for attr in ("row", "col", "diag"):
        values = [getattr(x, attr) for x in placement]
        if len(set(values)) != len(values):
            raise AssertionError(f"brooks share a {attr}: {placement}")
    if not all(x in board for x in placement):
        raise AssertionError(f"brook outside the board: {placement}")


# -- symmetric honeycomb search -----------------------------------------------


def _sphere_orbits(r: int) -> list[tuple[Cell, ...]]:
    """Orbits of the origin-centred Lee sphere under the corner-reflection group.

    Orbits that put two cells on one line can never be used and are dropped.
    """
    seen: set[Cell] = set()
    orbits = []
    for x in lee_sphere(Cell(0, 0), r).cells:
        if x in seen:
            continue
        orb = tuple(sorted({g(x) for g in HEX_SPHERE_SUBGROUP}, key=lambda c: (c.row, c.col)))
        seen.update(orb)
        if all(len({f(c) for c in orb}) == len(orb) for f in (lambda c: c.row, lambda c: c.col, lambda c: c.diag)):
            orbits.append(orb)
    return orbits


def _line_mask(cells, r: int):
    rows = cols = diags = 0
    for c in cells:
        rows |= 1 << (c.row + r)
        cols |= 1 << (c.col + r)
        diags |= 1 << (c.diag + 2 * r)
    return rows, cols, diags


def search_symmetric_honeycomb(r: int, workers: int = 1) -> list[HoneycombArray]:
    """Honeycomb arrays of radius ``r`` fixed by the three corner reflections, up to symmetry.

    Configurations are unions of orbits of the sphere cells. The search
    always extends by an orbit through the lowest row not yet occupied, so
    every solution is reached exactly once.
    """
    if r < 0:
        raise ValueError(f"radius must be non-negative, got {r}")
    orbits = _sphere_orbits(r)
    masks = [_line_mask(o, r) for o in orbits]
    full_rows = (1 << (2 * r + 1)) - 1
    by_row: dict[int, list[int]] = {}
    for idx, o in enumerate(orbits):
        for row in {c.row + r for c in o}:
            by_row.setdefault(row, []).append(idx)

    def new_differences(chosen: list[Cell], orb) -> list[tuple[int, int]] | None:
        out = []
        for a in orb:
            for b in chosen:
                out.append((a.col - b.col, a.row - b.row))
                out.append((b.col - a.col, b.row - a.row))
            for b in orb:
                if a != b:
                    out.append((a.col - b.col, a.row - b.row))
        return out

    def extend(chosen, diffs, rows, cols, dg, start_idx=None):
        if rows == full_rows:
            yield tuple(chosen)
            return
        low = (~rows & (rows + 1)).bit_length() - 1
        candidates = by_row.get(low, ()) if start_idx is None else (start_idx,)
        for idx in candidates:
            mr, mc, md = masks[idx]
            if mr & rows or mc & cols or md & dg:
                continue
            nd = new_differences(chosen, orbits[idx])
            if len(set(nd)) != len(nd) or not diffs.isdisjoint(nd):
                continue
            yield from extend(chosen + list(orbits[idx]), diffs | set(nd), rows | mr, cols | mc, dg | md)

    first = list(by_row.get(0, ()))

    def run(idx):
        return list(extend([], frozenset(), 0, 0, 0, idx))

    found = []
    for sols in _map(run, first, workers):
        for cells in sols:
            cfg = DotConfiguration(cells)
            if honeycomb_radius(cfg) is None:
                raise TheoremViolation(f"symmetric search produced a non-honeycomb {cfg!r}")
            found.append(as_honeycomb(cfg))
    return _finish(found, up_to_symmetry=True)
