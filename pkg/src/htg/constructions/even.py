"""Base 2-factors for four columns with l = 0 and l = 2."""

from __future__ import annotations

import functools

from ..core import HtgParams, build_graph
from ..errors import InternalVerificationFailed
from ..factor import TwoFactor, cycle_edges, verify_factor
from .family import Candidate
from .search import hamiltonian_cycle


def _column(i: int, lo: int, hi: int, step: int = 1) -> list[tuple[int, int]]:
    return [(i, j) for j in range(lo, hi + step, step)]


def l0_cycles(n: int) -> tuple[list, list]:
    c1 = [(0, 0), (0, 1), (1, 1), (1, 0), (1, n - 1), (0, n - 1)]
    c2 = [(0, 2), (3, 2), (3, 1), (3, 0), (3, n - 1), (2, n - 1), (2, 0), (2, 1), (2, 2)]
    c2 += _column(1, 2, n - 2)
    c2 += _column(2, n - 2, 3, -1)
    c2 += _column(3, 3, n - 2)
    c2 += _column(0, n - 2, 3, -1)
    return c1, c2


@functools.lru_cache(maxsize=64)
def l0_factor(n: int) -> TwoFactor:
    params = HtgParams(4, n, 0)
    c1, c2 = l0_cycles(n)
    return verify_factor(build_graph(params), cycle_edges(params, c1) + cycle_edges(params, c2))


def l0_candidates(params: HtgParams) -> list[Candidate]:
    return [Candidate("C1+C2", l0_factor(params.n))]


def l2_c1(n: int) -> list[tuple[int, int]]:
    return [(0, 0)] + _column(0, 1, 1) + _column(1, 1, n - 2) + _column(2, n - 2, 1, -1) + _column(3, 1, n - 2)


@functools.lru_cache(maxsize=64)
def l2_factor(n: int) -> TwoFactor:
    """C1 as given and a complementary cycle C2 from backtracking search."""
    params = HtgParams(4, n, 2)
    graph = build_graph(params)
    c1 = l2_c1(n)
    rest = set(range(params.order)) - {i * n + j for i, j in c1}
    c2 = hamiltonian_cycle(graph, rest)
    if c2 is None:
        raise InternalVerificationFailed(f"no cycle through the complement of C1 in {params}")
    edges = cycle_edges(params, c1) + cycle_edges(params, [divmod(k, n) for k in c2])
    return verify_factor(graph, edges)


def l2_candidates(params: HtgParams) -> list[Candidate]:
    return [Candidate("C1+C2(search)", l2_factor(params.n))]
