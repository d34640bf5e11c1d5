"""Vertical fills: grow a 2-factor of HTG(m,n,l) into one of HTG(m+2,n,l).

The flat edges of the factor between columns i and i+1 sit at levels
t_1 < ... < t_k.  Two new columns a, b are inserted between them and every
such flat edge becomes a path from u_{i,t} through a and b to u_{i+1,t}: a
downward fill walks column a down to the level just above the previous t,
crosses, and climbs column b back; an upward fill mirrors this.  The new
columns end up covered and the number of cycles is unchanged.
"""

from __future__ import annotations

import enum
from typing import Sequence

from ..core import HtgParams, build_graph
from ..errors import NoFlatEdges, OutOfRange, Unsupported
from ..factor import TwoFactor, verify_factor


class FillDirection(str, enum.Enum):
    UP = "U"
    DOWN = "D"


def _directions(dirs: FillDirection | str | Sequence[FillDirection | str]) -> list[FillDirection]:
    if isinstance(dirs, (FillDirection, str)):
        dirs = list(dirs.value if isinstance(dirs, FillDirection) else dirs)
    return [FillDirection(d) for d in dirs]


def _ladder(n: int, levels: list[int], idx: int, direction: FillDirection) -> list[int]:
    """Levels walked down (or up) column a from levels[idx] to the crossing level."""
    t = levels[idx]
    if direction is FillDirection.DOWN:
        stop = (levels[idx - 1] + 1) % n
        count = (t - stop) % n + 1
        return [(t - s) % n for s in range(count)]
    stop = (levels[(idx + 1) % len(levels)] - 1) % n
    count = (stop - t) % n + 1
    return [(t + s) % n for s in range(count)]


def _add_ladders(edges: set, n: int, levels: list[int], left: int, first_col: int, dirs: list[FillDirection]) -> None:
    """Thread each level in ``levels`` from column ``left`` through the inserted column pairs."""

    def add(c1: int, j1: int, c2: int, j2: int) -> None:
        a, b = c1 * n + j1, c2 * n + j2
        edges.add((a, b) if a < b else (b, a))

    for idx, t in enumerate(levels):
        prev = left
        for p, d in enumerate(dirs):
            a = first_col + 2 * p
            b = a + 1
            add(prev, t, a, t)
            walk = _ladder(n, levels, idx, d)
            for j1, j2 in zip(walk, walk[1:]):
                add(a, j1, a, j2)
                add(b, j1, b, j2)
            add(a, walk[-1], b, walk[-1])
            prev = b


def fill(factor: TwoFactor, column: int, directions: FillDirection | str | Sequence = FillDirection.DOWN) -> TwoFactor:
    """Insert ``2 * len(directions)`` columns between ``column`` and ``column + 1``.

    Several directions act like repeated fills between the two columns to the
    right of the insertion point, the first direction nearest ``column``.
    """
    p = factor.params
    m, n, ell = p.m, p.n, p.ell
    dirs = _directions(directions)
    if not 0 <= column <= m - 2:
        raise OutOfRange(f"no consecutive columns {column}, {column + 1} in {p}")
    if not dirs:
        return factor

    i = column
    # for m = 2, l = 0 the jump edges also join columns 0 and 1 at a level; skip them
    levels = [t for t in range(n) if (i + t) % 2 == 1 and (i * n + t, (i + 1) * n + t) in factor.edges]
    if not levels:
        raise NoFlatEdges(f"factor uses no flat edge between columns {i} and {i + 1}")

    k = 2 * len(dirs)
    new = HtgParams(m + k, n, ell)
    skip = {(i * n + t, (i + 1) * n + t) for t in levels}

    def remap(v: int) -> int:
        c, j = divmod(v, n)
        return (c if c <= i else c + k) * n + j

    edges = set()
    for a, b in factor.edges:
        if (a, b) in skip:
            continue
        ra, rb = remap(a), remap(b)
        edges.add((ra, rb) if ra < rb else (rb, ra))
    _add_ladders(edges, n, levels, i, i + 1, dirs)
    last = i + k
    for t in levels:
        a, b = last * n + t, (last + 1) * n + t
        edges.add((a, b))
    return verify_factor(build_graph(new), edges)


def expand_1_to_3(factor: TwoFactor, direction: FillDirection | str = FillDirection.UP) -> TwoFactor:
    """Carry a 2-factor of HTG(1,n,l) to HTG(3,n,l).

    Each used jump edge [u_{0,j}, u_{0,j+l}] (j odd) becomes the flat edge
    [u_{0,j}, u_{1,j}], a fill path through columns 1 and 2, and the jump edge
    [u_{2,j}, u_{0,j+l}].
    """
    p = factor.params
    if p.m != 1:
        raise Unsupported(f"expand_1_to_3 needs m = 1, got {p}")
    n, ell = p.n, p.ell
    (d,) = _directions(direction)

    levels = []
    for t in range(1, n, 2):
        a, b = t, (t + ell) % n
        if ((a, b) if a < b else (b, a)) in factor.edges:
            levels.append(t)
    if not levels:
        raise NoFlatEdges("factor uses no jump edge")

    jumps = {((t, (t + ell) % n) if t < (t + ell) % n else ((t + ell) % n, t)) for t in levels}
    # column 0 keeps its own indices when m grows from 1 to 3
    edges = {e for e in factor.edges if e not in jumps}
    _add_ladders(edges, n, levels, 0, 1, [d])
    for t in levels:
        a, b = 2 * n + t, (t + ell) % n
        edges.add((b, a))
    return verify_factor(build_graph(HtgParams(3, n, ell)), edges)
