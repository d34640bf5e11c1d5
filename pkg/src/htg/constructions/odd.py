"""Base 2-factors for an odd number of columns (l = 1, l = 3, and odd l > 3)."""

from __future__ import annotations

import functools

from ..core import HtgParams, build_graph
from ..errors import InternalVerificationFailed, Unsupported
from ..factor import TwoFactor, cycle_edges, verify_factor
from .family import Candidate
from .search import hamiltonian_cycle

Walk = list[tuple[int, int]]


def _column(i: int, lo: int, hi: int, step: int = 1) -> Walk:
    return [(i, j) for j in range(lo, hi + step, step)]


# -- ell = 1 -------------------------------------------------------------------


def l1_cycles(n: int) -> tuple[Walk, Walk]:
    c1 = [(0, 0), (0, 1), (1, 1), (1, 0), (1, n - 1), (0, n - 1)]
    c2 = [(2, 0), (2, 1)]
    c2 += _column(0, 2, n - 2)
    c2 += _column(2, n - 3, 2, -1)
    c2 += _column(1, 2, n - 2)
    c2 += [(2, n - 2), (2, n - 1)]
    return c1, c2


@functools.lru_cache(maxsize=64)
def l1_factor(n: int) -> TwoFactor:
    params = HtgParams(3, n, 1)
    c1, c2 = l1_cycles(n)
    return verify_factor(build_graph(params), cycle_edges(params, c1) + cycle_edges(params, c2))


def l1_candidates(params: HtgParams) -> list[Candidate]:
    return [Candidate("C1+C2", l1_factor(params.n))]


# -- ell = 3 -------------------------------------------------------------------


def l3_c3(n: int) -> Walk:
    return _column(0, 0, 3) + _column(1, 3, 0, -1) + [(2, 0), (2, n - 1), (2, n - 2), (2, n - 3)]


def l3_p(x: int) -> Walk:
    """P(x) for odd x: seven vertices from u_{2,x} to u_{2,x+4}."""
    return [(2, x), (0, x + 3), (0, x + 4), (1, x + 4), (1, x + 3), (2, x + 3), (2, x + 4)]


def l3_c4(n: int) -> Walk:
    """The cycle complementary to C3 in HTG(3,n,3), n >= 8."""
    if n == 8:
        return [(2, 1), (0, 4), (0, 5), (0, 6), (0, 7), (1, 7), (1, 6), (1, 5), (1, 4), (2, 4), (2, 3), (2, 2)]
    # the P(x) chains reach level n-5 and end at u_{2,n-7} and u_{2,n-5}; they
    # are glued through u_{2,1}, u_{2,2}, u_{2,3} at the bottom
    edges_walk: list[Walk] = [[(2, 1), (2, 2), (2, 3)]]
    edges_walk += [l3_p(x) for x in range(1, n - 8, 2)]
    edges_walk.append([(2, n - 7), (0, n - 4)])
    edges_walk.append([(2, n - 5), (2, n - 4), (1, n - 4)])
    edges_walk.append(_column(0, n - 4, n - 1) + _column(1, n - 1, n - 4, -1))
    return _stitch(edges_walk)


def _stitch(paths: list[Walk]) -> Walk:
    """Join open paths sharing end vertices into one closed walk."""
    nbrs: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for path in paths:
        for a, b in zip(path, path[1:]):
            nbrs.setdefault(a, []).append(b)
            nbrs.setdefault(b, []).append(a)
    start = min(nbrs)
    walk = [start]
    prev, cur = start, min(nbrs[start])
    while cur != start:
        walk.append(cur)
        x, y = nbrs[cur]
        prev, cur = cur, (y if x == prev else x)
    if len(walk) != len(nbrs):
        raise InternalVerificationFailed("path pieces do not close into a single cycle")
    return walk


@functools.lru_cache(maxsize=64)
def l3_factor(n: int) -> TwoFactor:
    """F = C3 + C4 on HTG(3,n,3); for n = 12 it matches the published drawing."""
    if n < 8:
        raise Unsupported(f"the three-column construction for l = 3 needs n >= 8, got {n}", "L3")
    params = HtgParams(3, n, 3)
    edges = cycle_edges(params, l3_c3(n)) + cycle_edges(params, l3_c4(n))
    return verify_factor(build_graph(params), edges)


# the complementary cycle for HTG(5,6,3) as printed
L3_SIX_C2: Walk = [(1, 0), (1, 1), (1, 2), (1, 3), (0, 3), (0, 4), (0, 5), (1, 5), (1, 4), (2, 4), (2, 5), (2, 0)]

# the printed C1 with its repeated u_{4,2} read as u_{4,3}
L3_SIX_C1_CORRECTED: Walk = [
    (0, 0), (0, 1), (0, 2), (4, 5), (4, 0), (4, 1), (4, 2), (3, 2), (3, 3),
    (2, 3), (2, 2), (2, 1), (3, 1), (3, 0), (3, 5), (3, 4), (4, 4), (4, 3),
]


@functools.lru_cache(maxsize=1)
def l3_six_factor() -> tuple[TwoFactor, list[int]]:
    """The HTG(5,6,3) factor: printed C2 and a C1 found by search on the remaining vertices."""
    params = HtgParams(5, 6, 3)
    graph = build_graph(params)
    c2 = cycle_edges(params, L3_SIX_C2)
    used = {i * 6 + j for i, j in L3_SIX_C2}
    c1 = hamiltonian_cycle(graph, set(range(params.order)) - used)
    if c1 is None:
        raise InternalVerificationFailed("no cycle through the complement of the printed C2")
    edges = c2 + [(min(a, b), max(a, b)) for a, b in zip(c1, c1[1:] + c1[:1])]
    return verify_factor(graph, edges), c1


def l3_candidates(params: HtgParams) -> list[Candidate]:
    if params.n == 6:
        return [Candidate("C1(search)+C2", l3_six_factor()[0])]
    return [Candidate("C3+C4", l3_factor(params.n))]
