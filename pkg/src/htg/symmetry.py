"""The automorphisms rho and pi of HTG(m,n,ell) and the abelian group they generate.

``rho`` shifts every vertex two levels up its column.  ``pi`` moves one column to
the right and one level up, wrapping from the last column to column 0 with an
extra shift of ``ell``.  The group G = <rho, pi> has order mn/2 and acts regularly
on each of its two orbits (vertices with i+j even, and with i+j odd).

Every element is kept in the normal form rho^a pi^b with 0 <= b < m and
0 <= a < n/2, using the relation pi^m = rho^((m+ell)/2).

:func:`reflection` is an extra automorphism outside G that swaps the orbits.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .core import HtgParams, Vertex

if TYPE_CHECKING:
    from .factor import TwoFactor


class OrbitId(enum.Enum):
    EVEN = 0
    ODD = 1


def orbit(v: Vertex | tuple[int, int]) -> OrbitId:
    return OrbitId((v[0] + v[1]) % 2)


def apply_rho(params: HtgParams, v: Vertex | tuple[int, int], k: int = 1) -> Vertex:
    return Vertex(v[0], (v[1] + 2 * k) % params.n)


def apply_pi(params: HtgParams, v: Vertex | tuple[int, int], k: int = 1) -> Vertex:
    wraps, i = divmod(v[0] + k, params.m)
    return Vertex(i, (v[1] + k + params.ell * wraps) % params.n)


@dataclass(frozen=True)
class GroupElement:
    """rho^a pi^b acting on HTG(params)."""

    params: HtgParams
    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        m, n, ell = self.params.m, self.params.n, self.params.ell
        wraps, b = divmod(self.b, m)
        a = (self.a + wraps * ((m + ell) // 2)) % (n // 2)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __call__(self, v: Vertex | tuple[int, int]) -> Vertex:
        return apply_rho(self.params, apply_pi(self.params, v, self.b), self.a)

    def __mul__(self, other: GroupElement) -> GroupElement:
        return GroupElement(self.params, self.a + other.a, self.b + other.b)

    def inverse(self) -> GroupElement:
        return GroupElement(self.params, -self.a, -self.b)

    @property
    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0

    def permutation(self) -> np.ndarray:
        """Flattened vertex permutation: ``perm[k]`` is the image of vertex ``k``."""
        m, n, ell = self.params.m, self.params.n, self.params.ell
        i, j = _coords(self.params)
        wraps, ni = np.divmod(i + self.b, m)
        return ni * n + (j + self.b + ell * wraps + 2 * self.a) % n

    @property
    def index(self) -> int:
        """Position in the canonical enumeration order of :func:`elements`."""
        return self.b * (self.params.n // 2) + self.a

    def __str__(self) -> str:
        parts = []
        if self.a:
            parts.append(f"rho^{self.a}")
        if self.b:
            parts.append(f"pi^{self.b}")
        return "*".join(parts) or "id"


def identity(params: HtgParams) -> GroupElement:
    return GroupElement(params)


def rho(params: HtgParams) -> GroupElement:
    return GroupElement(params, 1, 0)


def pi(params: HtgParams) -> GroupElement:
    return GroupElement(params, 0, 1)


def elements(params: HtgParams) -> list[GroupElement]:
    """All of G, identity first, ordered by (b, a)."""
    half = params.n // 2
    return [GroupElement(params, a, b) for b in range(params.m) for a in range(half)]


def transporter(params: HtgParams, x: Vertex | tuple[int, int], y: Vertex | tuple[int, int]) -> GroupElement | None:
    """The unique g in G with g(x) = y, or None when x and y lie in different orbits."""
    if orbit(x) != orbit(y):
        return None
    b = (y[0] - x[0]) % params.m
    moved = apply_pi(params, x, b)
    a = ((y[1] - moved.j) % params.n) // 2
    return GroupElement(params, a, b)


def reflection(params: HtgParams, v: Vertex | tuple[int, int]) -> Vertex:
    """u_{i,j} -> u_{m-1-i, c-j} with c = m mod 2.

    An involutive automorphism of HTG(m,n,ell) that exchanges the two orbits of G.
    """
    c = params.m % 2
    return Vertex(params.m - 1 - v[0], (c - v[1]) % params.n)


@functools.lru_cache(maxsize=64)
def _coords(params: HtgParams) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(params.order)
    return k // params.n, k % params.n


def image_rows(params: HtgParams, start: int, stop: int, cols: np.ndarray | None = None) -> np.ndarray:
    """Rows ``start:stop`` of :func:`group_image_matrix`, optionally only at vertices ``cols``."""
    m, n, ell = params.m, params.n, params.ell
    i, j = _coords(params)
    if cols is not None:
        i, j = i[cols], j[cols]
    half = n // 2
    idx = np.arange(start, min(stop, params.order // 2))
    b, a = np.divmod(idx, half)
    wraps, ni = np.divmod(i[None, :] + b[:, None], m)
    nj = (j[None, :] + b[:, None] + ell * wraps + 2 * a[:, None]) % n
    return ni * n + nj


@functools.lru_cache(maxsize=4)
def group_image_matrix(params: HtgParams) -> np.ndarray:
    """``M[g, k]`` = flattened image of vertex ``k`` under the g-th element of G."""
    out = image_rows(params, 0, params.order // 2)
    out.setflags(write=False)
    return out


def images_of(params: HtgParams, v: Vertex | tuple[int, int]) -> np.ndarray:
    """Flattened images of ``v`` under every element of G, in canonical order."""
    m, n, ell = params.m, params.n, params.ell
    half = n // 2
    b = np.repeat(np.arange(m), half)
    a = np.tile(np.arange(half), m)
    wraps, ni = np.divmod(v[0] + b, m)
    nj = (v[1] + b + ell * wraps + 2 * a) % n
    return ni * n + nj


def element_at(params: HtgParams, index: int) -> GroupElement:
    b, a = divmod(index, params.n // 2)
    return GroupElement(params, a, b)


def reflection_permutation(params: HtgParams) -> np.ndarray:
    i, j = _coords(params)
    c = params.m % 2
    return (params.m - 1 - i) * params.n + (c - j) % params.n


def apply_to_factor(g: GroupElement | np.ndarray, factor: TwoFactor) -> TwoFactor:
    """Image of a 2-factor under an automorphism (a group element or a raw permutation)."""
    from .factor import from_edges_unchecked

    perm = g.permutation() if isinstance(g, GroupElement) else g
    edges = frozenset(
        (pa, pb) if pa < pb else (pb, pa)
        for pa, pb in ((int(perm[a]), int(perm[b])) for a, b in factor.edges)
    )
    return from_edges_unchecked(factor.params, edges)
