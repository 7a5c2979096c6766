"""Backtracking kernels.

Everything here is restricted to what numba's nopython mode accepts: numpy
arrays, ints and bools, no recursion. See :mod:`honeycomb._accel` for how
they are compiled (or not).
"""

import numpy as np

from ._accel import njit


@njit
def perm_search(n, prefix, lo, use_diag, use_diff, out, max_nodes):
    """Depth-first search over permutations ``p`` of ``0..n-1`` extending ``prefix``.

    Column ``i`` holds a dot in row ``p[i]``. Constraints:

    * ``use_diag``: the diagonals ``i - p[i]`` are distinct and lie in
      ``lo .. lo + n - 1``;
    * ``use_diff``: all vectors ``(j - i, p[j] - p[i])`` with ``i < j`` are
      distinct, which is the distinct-difference property for a permutation.

    Solutions are produced in lexicographic order; the first ``len(out)`` of
    them are written to ``out``. Returns ``(count, nodes)``; ``nodes`` is -1
    if ``max_nodes > 0`` and the search gave up after that many placements.
    """
    m = 2 * n - 1
    p = np.zeros(n, np.int64)
    nxt = np.zeros(n + 1, np.int64)
    row_used = np.zeros(n, np.bool_)
    diag_used = np.zeros(n, np.bool_)
    diff_used = np.zeros((n, m), np.bool_)
    cap = out.shape[0]
    count = 0
    nodes = 0

    plen = prefix.shape[0]
    for k in range(plen):
        v = prefix[k]
        if v < 0 or v >= n or row_used[v]:
            return 0, nodes
        if use_diag:
            d = k - v - lo
            if d < 0 or d >= n or diag_used[d]:
                return 0, nodes
        if use_diff:
            for j in range(k):
                if diff_used[k - j, v - p[j] + n - 1]:
                    return 0, nodes
        p[k] = v
        row_used[v] = True
        if use_diag:
            diag_used[k - v - lo] = True
        if use_diff:
            for j in range(k):
                diff_used[k - j, v - p[j] + n - 1] = True
        nodes += 1

    if plen == n:
        if cap > 0:
            for j in range(n):
                out[0, j] = p[j]
        return 1, nodes

    k = plen
    nxt[k] = 0
    while k >= plen:
        v = nxt[k]
        hi = n
        if use_diag:
            # k - v in [lo, lo + n - 1]
            vmin = k - lo - n + 1
            if vmin > v:
                v = vmin
            vmax = k - lo + 1
            if vmax < hi:
                hi = vmax
        found = False
        while v < hi:
            if not row_used[v] and not (use_diag and diag_used[k - v - lo]):
                ok = True
                if use_diff:
                    for j in range(k):
                        if diff_used[k - j, v - p[j] + n - 1]:
                            ok = False
                            break
                if ok:
                    found = True
                    break
            v += 1

        if found:
            nodes += 1
            if max_nodes > 0 and nodes > max_nodes:
                return count, -1
            nxt[k] = v + 1
            if k + 1 == n:
                if count < cap:
                    for j in range(k):
                        out[count, j] = p[j]
                    out[count, k] = v
                count += 1
                continue
            p[k] = v
            row_used[v] = True
            if use_diag:
                diag_used[k - v - lo] = True
            if use_diff:
                for j in range(k):
                    diff_used[k - j, v - p[j] + n - 1] = True
            k += 1
            nxt[k] = 0
        else:
            k -= 1
            if k >= plen:
                v = p[k]
                row_used[v] = False
                if use_diag:
                    diag_used[k - v - lo] = False
                if use_diff:
                    for j in range(k):
                        diff_used[k - j, v - p[j] + n - 1] = False
    return count, nodes


@njit
def max_brooks_search(w):
    """Branch and bound for non-attacking brooks on the width-``w`` triangle.

    Board row ``t`` (``0 <= t < w``) holds columns ``0..t``; brooks attack
    along rows, columns and diagonals ``col - row``. Rows are decided from
    the widest down, each either receiving one brook or left empty, and a
    branch is cut as soon as ``placed + undecided rows`` cannot beat the best
    found so far.

    Returns ``(best, cols, nodes)`` where ``cols[t]`` is the column of the
    brook in board row ``t`` or -1.
    """
    col_used = np.zeros(w, np.bool_)
    diag_used = np.zeros(w, np.bool_)  # index row - col
    choice = np.full(w, -1, np.int64)  # by search level
    nxt = np.zeros(w + 1, np.int64)
    best_cols = np.full(w, -1, np.int64)
    best = 0
    k = 0
    nodes = 0

    level = 0
    nxt[0] = 0
    while level >= 0:
        if level == w:
            if k > best:
                best = k
                for t in range(w):
                    best_cols[w - 1 - t] = choice[t]
            level -= 1
            c = choice[level]
            if c >= 0:
                row = w - 1 - level
                col_used[c] = False
                diag_used[row - c] = False
                k -= 1
            continue

        row = w - 1 - level
        c = nxt[level]
        if c == 0 and k + (w - level) <= best:
            c = row + 2  # cannot improve
        placed = False
        while c <= row:
            if not col_used[c] and not diag_used[row - c]:
                placed = True
                break
            c += 1
        if placed:
            nodes += 1
            nxt[level] = c + 1
            choice[level] = c
            col_used[c] = True
            diag_used[row - c] = True
            k += 1
            level += 1
            nxt[level] = 0
        elif c == row + 1:
            nxt[level] = row + 2
            choice[level] = -1
            if k + (w - level - 1) > best:
                nodes += 1
                level += 1
                nxt[level] = 0
        else:
            level -= 1
            if level >= 0:
                c = choice[level]
                if c >= 0:
                    row = w - 1 - level
                    col_used[c] = False
                    diag_used[row - c] = False
                    k -= 1
                    choice[level] = -1
    return best, best_cols, nodes
