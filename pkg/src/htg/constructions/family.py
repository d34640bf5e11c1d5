"""Turning a family of base 2-factors into separating certificates.

A construction supplies a few 2-factors made of two cycles.  To separate an
arbitrary pair we first move it to ``(u_{0,0}, w)`` with an automorphism phi
(the orbit-swapping reflection if needed, then the transporter in G), look for a
base factor F and g in G such that F separates g(u_{0,0}) and g(w), and return
phi^{-1} g^{-1} F.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

import numpy as np

from .. import symmetry
from ..core import HtgParams, Vertex
from ..errors import NoFlatEdges
from ..factor import TwoFactor
from .fill import FillDirection, expand_1_to_3, fill

ORIGIN = Vertex(0, 0)
CHUNK = 32
ORIGIN_COLUMN = np.array([0])


@dataclass(frozen=True)
class Candidate:
    label: str
    factor: TwoFactor


@dataclass(frozen=True)
class Normalization:
    """Automorphism ``perm`` with perm(x) = u_{0,0} and perm(y) = w."""

    w: Vertex
    perm: np.ndarray
    steps: str

    def inverse(self) -> np.ndarray:
        return np.argsort(self.perm)


def normalize_pair(params: HtgParams, x: Vertex, y: Vertex) -> Normalization:
    order = params.order
    perm = np.arange(order)
    steps = []
    if symmetry.orbit(x) is symmetry.OrbitId.ODD:
        if symmetry.orbit(y) is symmetry.OrbitId.ODD:
            perm = symmetry.reflection_permutation(params)
            x, y = symmetry.reflection(params, x), symmetry.reflection(params, y)
            steps.append("reflection")
        else:
            x, y = y, x
            steps.append("swap")
    g = symmetry.transporter(params, x, ORIGIN)
    assert g is not None
    if not g.is_identity:
        steps.append(str(g))
    perm = g.permutation()[perm]
    return Normalization(g(y), perm, ", ".join(steps))


def find_in_family(params: HtgParams, w: Vertex, candidates: Iterable[Candidate]) -> tuple[Candidate, symmetry.GroupElement] | None:
    """First candidate (in order) and first g in G with candidate separating g(u_{0,0}), g(w)."""
    origin_images = symmetry.images_of(params, ORIGIN)
    w_images = symmetry.images_of(params, w)
    for cand in candidates:
        if cand.factor.num_cycles != 2:
            continue
        labels = cand.factor.labels
        hits = labels[origin_images] != labels[w_images]
        if hits.any():
            return cand, symmetry.element_at(params, int(np.argmax(hits)))
    return None


def coverage(params: HtgParams, candidates: Iterable[Candidate]) -> tuple[np.ndarray, list[Candidate], np.ndarray]:
    """For every vertex w, the first (candidate, g) separating u_{0,0} from w.

    Returns ``(cand_index, used, g_index)`` where ``cand_index[w]`` is -1 when no
    candidate works (always for w = u_{0,0}).  Candidates are consumed lazily and
    the scan stops as soon as every w != u_{0,0} is covered.
    """
    order = params.order
    size = order // 2
    cand_index = np.full(order, -1, dtype=np.int64)
    g_index = np.full(order, -1, dtype=np.int64)
    used: list[Candidate] = []
    missing = np.ones(order, dtype=bool)
    missing[0] = False
    for cand in candidates:
        if cand.factor.num_cycles != 2:
            continue
        labels = cand.factor.labels
        hit = np.full(order, -1, dtype=np.int64)
        open_ = missing.copy()
        # rows in order of G; the first separating row per w is kept, so a chunk
        # can stop the scan once nothing is left open; chunks double as the open
        # set shrinks
        start, step = 0, CHUNK
        while start < size:
            cols = np.flatnonzero(open_)
            if not cols.size:
                break
            origin = symmetry.image_rows(params, start, start + step, ORIGIN_COLUMN)
            sep = labels[origin] != labels[symmetry.image_rows(params, start, start + step, cols)]
            found = sep.any(axis=0)
            hit[cols[found]] = start + np.argmax(sep[:, found], axis=0)
            open_[cols[found]] = False
            start, step = start + step, step * 2
        newly = hit >= 0
        if newly.any():
            cand_index[newly] = len(used)
            g_index[newly] = hit[newly]
            used.append(cand)
            missing &= ~newly
        if not missing.any():
            break
    return cand_index, used, g_index


def fill_plans(steps: int) -> list[str]:
    """Direction strings tried when growing a factor by ``steps`` fills."""
    plans = ["D" * steps, "U" * steps, ("DU" * steps)[:steps], ("UD" * steps)[:steps]]
    return list(dict.fromkeys(plans))


def grow(factor: TwoFactor, target_m: int, plan: str) -> TwoFactor:
    """Fill between the last two columns (expanding first when m = 1) until m = target_m."""
    if factor.params.m == target_m:
        return factor
    if factor.params.m == 1:
        factor = expand_1_to_3(factor, FillDirection(plan[0]))
        plan = plan[1:]
    if plan:
        factor = fill(factor, factor.params.m - 2, plan)
    return factor


def grown_family(
    params: HtgParams,
    m0: int,
    base: Callable[[HtgParams], list[Candidate]],
) -> Iterator[Candidate]:
    """Base factors on HTG(m0,n,l), moved by G and grown to m columns.

    At m = m0 the base factors are returned as is (G is searched later anyway).
    Beyond that every g in G(m0) is tried, identity first, since a fill between
    fixed columns does not commute with the column-shifting elements of G.
    """
    small = HtgParams(m0, params.n, params.ell)
    bases = base(small)
    if params.m == m0:
        yield from bases
        return
    steps = (params.m - m0) // 2
    plans = fill_plans(steps)
    for g in symmetry.elements(small):
        for cand in bases:
            moved = cand.factor if g.is_identity else symmetry.apply_to_factor(g, cand.factor)
            for plan in plans:
                try:
                    grown = grow(moved, params.m, plan)
                except NoFlatEdges:
                    continue
                yield Candidate(f"{cand.label}; g0={g}; fills={plan}", grown)
