"""Two-column graphs HTG(2,n,l): the l = 0 ladder scheme and even l > 2."""

from __future__ import annotations

import functools

from ..core import HtgParams, Vertex, build_graph
from ..errors import NoDecomposition, SameVertex, Unsupported
from ..factor import TwoFactor, cycle_edges, verify_factor
from .family import Candidate
from .frobenius import Decomposition, decompose_even


def columns_factor(params: HtgParams) -> TwoFactor:
    """Every column as its own cycle (two cycles when m = 2)."""
    n = params.n
    edges = [(i * n + j, i * n + (j + 1) % n) for i in range(params.m) for j in range(n)]
    return verify_factor(build_graph(params), edges)


# -- ell = 0 -------------------------------------------------------------------


def _band(n: int, lo: int, hi: int) -> list[tuple[int, int]]:
    """Ladder cycle over levels lo..hi (cyclically): up column 0, back down column 1."""
    count = (hi - lo) % n + 1
    levels = [(lo + s) % n for s in range(count)]
    return [(0, j) for j in levels] + [(1, j) for j in reversed(levels)]


def zero_factor(n: int, x: Vertex, y: Vertex) -> tuple[TwoFactor, str]:
    """A factor of HTG(2,n,0) separating x and y.

    Different columns: the two column cycles.  Same column with levels a, b: two
    ladder bands, one starting at a and one at b, each at least two levels tall.
    Every level carries a rung (flat at odd levels, jump at even ones), so each
    band closes up.
    """
    params = HtgParams(2, n, 0)
    if x == y:
        raise SameVertex(f"cannot separate {x} from itself")
    if x.i != y.i:
        return columns_factor(params), "columns"
    a, b = x.j, y.j
    d = (b - a) % n
    if d == 1:
        bands = ((a - 1, a), (b, a - 2))
    elif d == n - 1:
        bands = ((a, b - 2), (b - 1, b))
    else:
        bands = ((a, b - 1), (b, a - 1))
    edges = []
    for lo, hi in bands:
        edges += cycle_edges(params, _band(n, lo % n, hi % n))
    spans = ", ".join(f"{lo % n}..{hi % n}" for lo, hi in bands)
    return verify_factor(build_graph(params), edges), f"bands {spans}"


# -- even ell > 2 --------------------------------------------------------------


def beta_decomposition(n: int, ell: int) -> Decomposition | None:
    return decompose_even(n - 2 * ell, ell + 2, ell)


def beta_c1(n: int, ell: int) -> list[tuple[int, int]]:
    walk = [(0, 0), (0, n - 1), (1, n - 1)]
    walk += [(1, j) for j in range(ell - 2)]
    walk += [(0, j) for j in range(ell - 3, 0, -1)]
    return walk


def beta_p(x: int, ell: int) -> list[tuple[int, int]]:
    """P(x): 2l + 5 vertices over l + 2 consecutive levels."""
    return [(0, x + s) for s in range(ell + 1)] + [(1, x + s) for s in range(ell + 2)] + [(0, x + ell + 1), (0, x + ell + 2)]


def beta_r(x: int, ell: int) -> list[tuple[int, int]]:
    """R(x): P(x) minus its last three edges."""
    return beta_p(x, ell)[:-3]


def beta_q(x: int, ell: int) -> list[tuple[int, int]]:
    """Q(x): 2l + 1 vertices over l consecutive levels."""
    return [(1, x)] + [(0, x + s) for s in range(ell, 0, -1)] + [(1, x + s) for s in range(1, ell + 1)]


@functools.lru_cache(maxsize=64)
def beta_factor(n: int, ell: int) -> tuple[TwoFactor, str]:
    if ell % 2 or ell <= 2:
        raise Unsupported(f"the two-column construction needs even ell > 2, got {ell}", "beta")
    dec = beta_decomposition(n, ell) if n >= 2 * ell else None
    if dec is None:
        raise NoDecomposition(
            f"n - 2l = {n - 2 * ell} is not a nonnegative combination of {ell + 2} and {ell}", "beta"
        )
    params = HtgParams(2, n, ell)
    x = ell - 2
    walk: list[tuple[int, int]] = []
    for _ in range(dec.beta):
        path = beta_p(x, ell)
        walk += path[:-1]
        x = path[-1][1]
    walk += beta_r(x, ell)[:-1]
    y = x + ell
    for _ in range(dec.gamma):
        path = beta_q(y, ell)
        walk += path[:-1]
        y = path[-1][1]
    walk.append((1, y))
    if y % n != n - 2:
        raise Unsupported(f"C2 ends at level {y % n}, not {n - 2}", "beta")
    edges = cycle_edges(params, beta_c1(n, ell)) + cycle_edges(params, walk)
    return verify_factor(build_graph(params), edges), f"beta={dec.beta}, gamma={dec.gamma}"


def beta_candidates(params: HtgParams) -> list[Candidate]:
    factor, note = beta_factor(params.n, params.ell)
    return [Candidate("columns", columns_factor(params)), Candidate(f"C1+C2 ({note})", factor)]
