"""Base 2-factors of the one-column graphs HTG(1,n,l).

Vertex ``v_j`` stands for ``u_{0,j}`` throughout, as flattened index ``j``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from ..core import HtgParams, build_graph
from ..errors import NoDecomposition, Unsupported
from ..factor import TwoFactor, verify_factor
from .family import Candidate
from .frobenius import Decomposition, decompose_even
from .search import hamiltonian_path


def _key(a: int, b: int, n: int) -> tuple[int, int]:
    a, b = a % n, b % n
    return (a, b) if a < b else (b, a)


def _walk_edges(walk: list[int], n: int) -> set[tuple[int, int]]:
    return {_key(a, b, n) for a, b in zip(walk, walk[1:] + walk[:1])}


# -- ell = 3 -------------------------------------------------------------------


def o3_factor(n: int) -> TwoFactor:
    """The 4-cycle on v_0, v_{n-3}, v_{n-2}, v_{n-1} plus one cycle through v_1..v_{n-4}."""
    if n % 4 or n <= 6:
        raise Unsupported(f"HTG(1,{n},3) needs n = 0 mod 4 and n > 6", "O3")
    edges = _walk_edges([0, n - 3, n - 2, n - 1], n)
    second = _walk_edges([1, 2, 3, 4], n)
    for k in range(3, n - 6, 2):
        # swap [v_k, v_{k+1}] for the detour v_k, v_{k+3}, v_{k+2}, v_{k+1}
        second.remove(_key(k, k + 1, n))
        second |= {_key(k, k + 3, n), _key(k + 3, k + 2, n), _key(k + 2, k + 1, n)}
    return verify_factor(build_graph(HtgParams(1, n, 3)), edges | second)


def o3_forced_factor(n: int) -> TwoFactor:
    """The only candidate for separating v_0 and v_{n-1}: levels 4k, 4k+1 against 4k+2, 4k+3."""
    edges = set()
    for start in (0, 2):
        for base in range(start, n, 4):
            edges.add(_key(base, base + 1, n))
            edges.add(_key(base + 1, base + 4, n))
    return verify_factor(build_graph(HtgParams(1, n, 3)), edges)


def o3_candidates(params: HtgParams) -> list[Candidate]:
    return [Candidate("C1+C2", o3_factor(params.n)), Candidate("C3+C4", o3_forced_factor(params.n))]


# -- odd ell > 3 ---------------------------------------------------------------


def alpha_p(x: int, ell: int) -> list[int]:
    """P(x): ell + 2 vertices, ell + 1 edges."""
    return [x - s for s in range(ell - 3)] + [x + 4, x + 3, x + 2, x + 1, x + 1 + ell]


def alpha_q(x: int, ell: int) -> list[int]:
    """Q(x): 3l + 2 vertices, 3l + 1 edges."""
    walk = [x - s for s in range(ell - 3)]
    walk += list(range(x + 4, x + ell + 2))
    walk += [x + 1, x + 2, x + 3, x + 3 + ell, x + 2 + ell, x + 2 + 2 * ell, x + 3 + 2 * ell, x + 4 + 2 * ell]
    walk += list(range(x + 4 + ell, x + 2 + 2 * ell))
    walk.append(x + 1 + 3 * ell)
    return walk


def alpha_decomposition(n: int, ell: int) -> Decomposition | None:
    alpha = n - 2 * ell
    if alpha <= 0:
        return None
    return decompose_even(alpha, ell + 1, 3 * ell + 1)


def _c1(n: int, ell: int) -> list[int]:
    return [ell - 3, ell - 2, ell - 1, n - 1, n - 2, n - 3]


def _seed(n: int, ell: int) -> list[int]:
    return list(range(n - 4, n - ell - 1, -1)) + list(range(0, ell - 3))


# A piece of length L starting at v_x is a path from v_x through exactly the
# levels x-l+4 .. x-l+3+L whose last vertex v_{x+L-l} jumps to v_{x+L}, where
# the next piece starts.  P and Q are the pieces of length l+1 and 3l+1.  Shifting
# every level by 2 is an automorphism, so a piece found once serves every even x.
EXTRA_LENGTHS = (-1, 3)  # lengths 3l-1 and 3l+3


@functools.lru_cache(maxsize=None)
def extra_piece(ell: int, length: int) -> tuple[int, ...] | None:
    """Offsets from x of a piece of the given even length, found by backtracking."""
    x = 2 * ell
    graph = build_graph(HtgParams(1, x + 2 * length + 2 * ell, ell))
    levels = set(range(x - ell + 4, x - ell + 4 + length))
    path = hamiltonian_path(graph, levels, x, x + length - ell)
    if path is None:
        return None
    return tuple(v - x for v in path) + (length,)


@dataclass(frozen=True)
class PiecePlan:
    beta: int
    gamma: int
    extra: tuple[int, ...]  # lengths of searched pieces, in chain order

    @property
    def note(self) -> str:
        text = f"beta={self.beta}, gamma={self.gamma}"
        if self.extra:
            text += ", searched pieces " + "+".join(str(k) for k in self.extra)
        return text


def piece_plan(n: int, ell: int, allow_search: bool = False) -> PiecePlan | None:
    """P and Q pieces when n - 2l decomposes; otherwise the fewest searched pieces that make it."""
    dec = alpha_decomposition(n, ell)
    if dec is not None:
        return PiecePlan(dec.beta, dec.gamma, ())
    alpha = n - 2 * ell
    if not allow_search or alpha <= 0:
        return None
    short, long_ = (3 * ell + d for d in EXTRA_LENGTHS)
    if extra_piece(ell, short) is None or extra_piece(ell, long_) is None:
        return None
    for total in range(1, ell + 2):
        for k in range(total, -1, -1):
            rest = alpha - k * short - (total - k) * long_
            dec = decompose_even(rest, ell + 1, 3 * ell + 1) if rest >= 0 else None
            if dec is not None:
                return PiecePlan(dec.beta, dec.gamma, (short,) * k + (long_,) * (total - k))
    return None


@functools.lru_cache(maxsize=64)
def alpha_factor(n: int, ell: int, allow_search: bool = False) -> tuple[TwoFactor, str]:
    """The 6-cycle C1 and its complementary cycle C2, plus a note on how C2 was made.

    C2 is a chain of P and Q pieces when n - 2l is a nonnegative combination of
    l + 1 and 3l + 1.  Otherwise, with ``allow_search``, pieces of length 3l - 1
    and 3l + 3 found by backtracking are chained in as well.
    """
    if ell % 2 == 0 or ell <= 3:
        raise Unsupported(f"the one-column construction needs odd ell > 3, got {ell}", "alpha")
    params = HtgParams(1, n, ell)
    plan = piece_plan(n, ell, allow_search)
    if plan is None:
        raise NoDecomposition(
            f"n - 2l = {n - 2 * ell} is not a positive combination of {ell + 1} and {3 * ell + 1}", "alpha"
        )
    walk = _seed(n, ell)
    x = 2 * ell - 4
    pieces = [alpha_p] * plan.beta + [alpha_q] * plan.gamma
    pieces += [lambda x, ell, k=k: [x + d for d in extra_piece(ell, k)] for k in plan.extra]
    for piece in pieces:
        path = piece(x, ell)
        walk += path[:-1]
        x = path[-1]
    if x % n != n - 4:
        raise Unsupported(f"pieces end at v_{x % n}, not v_{n - 4}", "alpha")
    edges = _walk_edges(_c1(n, ell), n) | _walk_edges(walk, n)
    return verify_factor(build_graph(params), edges), plan.note


def alpha_candidates(params: HtgParams, allow_search: bool = False) -> list[Candidate]:
    factor, note = alpha_factor(params.n, params.ell, allow_search)
    return [Candidate(f"C1+C2 ({note})", factor)]
