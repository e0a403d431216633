"""Rim hooks of rectangles, Hillman-Grassl, and the toggle form of RSK.

A rectangle has ``rows`` rows and ``cols`` columns; it belongs to A_n with
n = rows + cols - 1 and minuscule vertex m = cols.  Every rim hook of a
rectangle contains the SE corner; the hook keyed (r, c) runs from the bottom
of column c along the border up to row r of the last column.  Grids are lists
of rows, top row first, weakly increasing to the right and downward.
"""

from __future__ import annotations

from collections import Counter

Shape = tuple[int, int]


def rimhook_dimvector(shape: Shape, hook: tuple[int, int]) -> tuple[int, ...]:
    rows, cols = shape
    r, c = hook
    if not (1 <= r <= rows and 1 <= c <= cols):
        raise ValueError(f"hook {hook} does not fit a {rows}x{cols} rectangle")
    n = rows + cols - 1
    last = cols + rows - r
    return tuple(int(c <= k <= last) for k in range(1, n + 1))


def dimvector_rimhook(shape: Shape, dim) -> tuple[int, int]:
    rows, cols = shape
    dim = tuple(dim)
    ones = [k + 1 for k, v in enumerate(dim) if v]
    if len(dim) != rows + cols - 1 or not ones or any(v not in (0, 1) for v in dim):
        raise ValueError(f"{dim} is not a 0/1 vector of length {rows + cols - 1}")
    first, last = ones[0], ones[-1]
    if len(ones) != last - first + 1 or not first <= cols <= last:
        raise ValueError(f"{dim} is not an interval through vertex {cols}")
    return (cols + rows - last, first)


def zero_grid(shape: Shape) -> list[list[int]]:
    return [[0] * shape[1] for _ in range(shape[0])]


def is_grid_rpp(grid) -> bool:
    rows, cols = len(grid), len(grid[0])
    return all(
        grid[r][c] >= 0
        and (r == 0 or grid[r - 1][c] <= grid[r][c])
        and (c == 0 or grid[r][c - 1] <= grid[r][c])
        for r in range(rows)
        for c in range(cols)
    )


# -- Hillman-Grassl -------------------------------------------------------------

def _hg_path(grid, r1: int, c0: int) -> list[tuple[int, int]]:
    """Walk back from the end of row r1 to the bottom of column c0 (0-based)."""
    rows, cols = len(grid), len(grid[0])
    r, c = r1, cols - 1
    path = [(r, c)]
    while (r, c) != (rows - 1, c0):
        if r < rows - 1 and (c == c0 or grid[r + 1][c] == grid[r][c]):
            r += 1
        elif c > c0:
            c -= 1
        else:
            raise AssertionError("Hillman-Grassl path left the rectangle")
        path.append((r, c))
    return path


def hillman_grassl(shape: Shape, hooks) -> list[list[int]]:
    grid = zero_grid(shape)
    # insert in the reverse of the order in which the inverse peels hooks off
    for (r, c), k in sorted(Counter(hooks).items(), key=lambda kv: (-kv[0][1], kv[0][0])):
        for _ in range(k):
            for a, b in _hg_path(grid, r - 1, c - 1):
                grid[a][b] += 1
    return grid


def hillman_grassl_inverse(grid) -> Counter:
    grid = [list(row) for row in grid]
    if not is_grid_rpp(grid):
        raise ValueError("grid is not a reverse plane partition")
    rows, cols = len(grid), len(grid[0])
    hooks = Counter()
    while any(any(row) for row in grid):
        c0 = min(c for c in range(cols) if grid[rows - 1][c])
        r, c = rows - 1, c0
        path = [(r, c)]
        while True:
            if r > 0 and grid[r - 1][c] == grid[r][c]:
                r -= 1
            elif c < cols - 1:
                c += 1
            else:
                break
            path.append((r, c))
        for a, b in path:
            grid[a][b] -= 1
        hooks[(r + 1, c0 + 1)] += 1
    return hooks


# -- RSK by toggles ---------------------------------------------------------------

def _grid_toggle(grid, filled, r: int, c: int) -> None:
    hi = max((grid[a][b] for a, b in ((r - 1, c), (r, c - 1)) if (a, b) in filled), default=0)
    lows = [grid[a][b] for a, b in ((r + 1, c), (r, c + 1)) if (a, b) in filled]
    grid[r][c] = hi + min(lows) - grid[r][c]


def rsk_rect(shape: Shape, hooks) -> list[list[int]]:
    """Grow the rectangle cell by cell; a new cell toggles its NW diagonal first."""
    rows, cols = shape
    weight = Counter(hooks)
    grid = zero_grid(shape)
    filled = set()
    for r in range(rows):
        for c in range(cols):
            for k in range(1, min(r, c) + 1):
                _grid_toggle(grid, filled, r - k, c - k)
            hi = max((grid[a][b] for a, b in ((r - 1, c), (r, c - 1)) if (a, b) in filled), default=0)
            grid[r][c] = hi + weight[(r + 1, c + 1)]
            filled.add((r, c))
    return grid


def rsk_rect_inverse(grid) -> Counter:
    grid = [list(row) for row in grid]
    if not is_grid_rpp(grid):
        raise ValueError("grid is not a reverse plane partition")
    rows, cols = len(grid), len(grid[0])
    filled = {(r, c) for r in range(rows) for c in range(cols)}
    hooks = Counter()
    for r in reversed(range(rows)):
        for c in reversed(range(cols)):
            filled.discard((r, c))
            hi = max((grid[a][b] for a, b in ((r - 1, c), (r, c - 1)) if (a, b) in filled), default=0)
            w = grid[r][c] - hi
            if w < 0:
                raise ValueError("grid is not in the image of RSK")
            if w:
                hooks[(r + 1, c + 1)] = w
            grid[r][c] = 0
            for k in range(1, min(r, c) + 1):
                _grid_toggle(grid, filled, r - k, c - k)
    return hooks


# -- transport between heaps and grids ------------------------------------------

def heap_index(dim, m: int, orientation: str) -> tuple[int, int]:
    """The (i, j) label of a heap element, with (n+1-m, 1) minimal and (1, m) maximal.

    ``orientation`` is "hg" for 1<-2<-...<-n and "rsk" for 1->...->m<-...<-n.
    """
    ones = [k + 1 for k, v in enumerate(dim) if v]
    first, last = ones[0], ones[-1]
    i = len(dim) - last + 1
    if orientation == "hg":
        return i, first
    if orientation == "rsk":
        return i, m - first + 1
    raise ValueError(f"orientation must be 'hg' or 'rsk', got {orientation!r}")


def heap_to_grid(rpp, m: int, orientation: str) -> list[list[int]]:
    heap = rpp.heap
    n = len(heap.roots[0])
    grid = zero_grid((n + 1 - m, m))
    for x, v in enumerate(rpp.values):
        i, j = heap_index(heap.roots[x], m, orientation)
        grid[i - 1][m - j] = v
    return grid


def hooks_of(heap, mults) -> Counter:
    """The rim-hook multiset of an object of C_{Q,m} in type A."""
    m = heap.m
    shape = (len(heap.roots[0]) + 1 - m, m)
    out = Counter()
    for x, k in enumerate(mults):
        if k:
            out[dimvector_rimhook(shape, heap.roots[x])] += k
    return out


def hg_quiver_orient(n: int) -> str:
    return "<".join(str(k) for k in range(1, n + 1))


def rsk_quiver_orient(n: int, m: int) -> str:
    left = ">".join(str(k) for k in range(1, m + 1))
    right = "".join(f"<{k}" for k in range(m + 1, n + 1))
    return left + right
