"""Brute-force separability on small graphs.

In a cubic graph the complement of a perfect matching is a 2-factor and vice
versa, so enumerating perfect matchings enumerates 2-factors.  Matchings are
found by branching on the least uncovered vertex, trying its neighbours in
increasing order; that fixes a canonical enumeration order.

A 2-factor with two cycles is recorded as the bitmask of the cycle through
vertex 0.  Two vertices are separable iff some recorded mask contains exactly
one of them.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import symmetry
from .core import HtgGraph, HtgParams, Vertex, build_graph, validate
from .errors import SameVertex, TooLarge, ValidationError
from .factor import TwoFactor, from_edges_unchecked

DEFAULT_MAX_ORDER = 48


def _check_size(graph: HtgGraph, max_order: int) -> None:
    if graph.order > max_order:
        raise TooLarge(f"{graph.params} has {graph.order} vertices, above the oracle cap of {max_order}")


def _matchings(adjacency: Sequence[Sequence[int]], first: int | None = None) -> Iterator[list[int]]:
    """Yield each perfect matching as a mate array, in canonical order.

    ``first`` restricts the partner of vertex 0 to one neighbour (used to split
    work by first-level branch).
    """
    order = len(adjacency)
    full = (1 << order) - 1
    mate = [-1] * order

    def rec(covered: int) -> Iterator[list[int]]:
        if covered == full:
            yield mate
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        options = adjacency[v] if (v or first is None) else (first,)
        for w in options:
            if covered >> w & 1:
                continue
            mate[v], mate[w] = w, v
            yield from rec(covered | (1 << v) | (1 << w))
        mate[v] = -1

    yield from rec(0)


def _cycles(adjacency: Sequence[Sequence[int]], mate: list[int], limit: int = 3) -> list[int]:
    """Cycle bitmasks of the complementary 2-factor (stops after ``limit`` cycles)."""
    order = len(adjacency)
    seen = 0
    masks = []
    for start in range(order):
        if seen >> start & 1:
            continue
        mask = 1 << start
        prev, cur = start, next(w for w in adjacency[start] if w != mate[start])
        while cur != start:
            mask |= 1 << cur
            nxt = [w for w in adjacency[cur] if w != mate[cur] and w != prev]
            prev, cur = cur, (nxt[0] if nxt else start)
        seen |= mask
        masks.append(mask)
        if len(masks) >= limit:
            break
    return masks


@dataclass
class _Scan:
    factors: int = 0
    masks: dict[int, None] = field(default_factory=dict)


def _scan(adjacency: tuple[tuple[int, ...], ...], first: int | None) -> _Scan:
    out = _Scan()
    for mate in _matchings(adjacency, first):
        out.factors += 1
        masks = _cycles(adjacency, mate)
        if len(masks) == 2:
            out.masks.setdefault(masks[0])
    return out


def _scan_all(graph: HtgGraph, jobs: int) -> _Scan:
    adjacency = graph.adjacency
    if jobs <= 1:
        return _scan(adjacency, None)
    branches = list(adjacency[0])
    with ProcessPoolExecutor(max_workers=min(jobs, len(branches))) as pool:
        parts = list(pool.map(_scan, [adjacency] * len(branches), branches))
    total = _Scan()
    for part in parts:  # branch order matches the sequential enumeration order
        total.factors += part.factors
        for mask in part.masks:
            total.masks.setdefault(mask)
    return total


# -- public API ----------------------------------------------------------------


def enumerate_matchings(graph: HtgGraph, max_order: int = DEFAULT_MAX_ORDER) -> Iterator[frozenset[tuple[int, int]]]:
    _check_size(graph, max_order)
    for mate in _matchings(graph.adjacency):
        yield frozenset((v, w) for v, w in enumerate(mate) if v < w)


def enumerate_two_factors(graph: HtgGraph, max_order: int = DEFAULT_MAX_ORDER) -> Iterator[TwoFactor]:
    """Every 2-factor exactly once, as the complement of each perfect matching."""
    edges = set(graph.edges)
    for matching in enumerate_matchings(graph, max_order):
        yield from_edges_unchecked(graph.params, edges - matching)


@dataclass(frozen=True)
class PairDecision:
    separable: bool
    witness: TwoFactor | None


def decide_pair(graph: HtgGraph, x: Vertex | tuple[int, int], y: Vertex | tuple[int, int], max_order: int = DEFAULT_MAX_ORDER) -> PairDecision:
    """Stop at the first two-cycle factor (in enumeration order) separating x and y."""
    _check_size(graph, max_order)
    a, b = graph.index(x), graph.index(y)
    if a == b:
        raise SameVertex(f"cannot separate {Vertex(*x)} from itself")
    adjacency = graph.adjacency
    edges = set(graph.edges)
    for mate in _matchings(adjacency):
        masks = _cycles(adjacency, mate)
        if len(masks) == 2 and (masks[0] >> a & 1) != (masks[0] >> b & 1):
            matching = {(v, w) for v, w in enumerate(mate) if v < w}
            return PairDecision(True, from_edges_unchecked(graph.params, edges - matching))
    return PairDecision(False, None)


@dataclass(frozen=True)
class DecisionReport:
    params: HtgParams
    separable: np.ndarray = field(repr=False, compare=False)
    is_2sc: bool
    witness_counts: int
    factor_count: int
    counterexample: tuple[Vertex, Vertex] | None
    pairs_checked: int
    mode: str = "all-pairs"

    def to_json(self) -> dict:
        ce = None if self.counterexample is None else [list(v) for v in self.counterexample]
        return {
            "params": self.params.to_json(),
            "is_2sc": self.is_2sc,
            "counterexample": ce,
            "pairs_checked": self.pairs_checked,
        }


def _bits(masks: Iterable[int], order: int) -> np.ndarray:
    rows = [[m >> k & 1 for k in range(order)] for m in masks]
    return np.array(rows, dtype=np.int64).reshape(-1, order)


def _all_pairs(masks: list[int], order: int) -> np.ndarray:
    bits = _bits(masks, order)
    diff = bits.T @ (1 - bits)
    return (diff + diff.T) > 0


def _base_vertex(params: HtgParams, masks: list[int], order: int) -> np.ndarray:
    """Rows for u_{0,0} and u_{0,1} only; every other pair is moved there by G."""
    bits = _bits(masks, order).astype(bool)
    reps = [0, 1]  # u_{0,0} and u_{0,1}, one per orbit of G
    rows = {r: (bits[:, [r]] != bits).any(axis=0) for r in reps}
    sep = np.zeros((order, order), dtype=bool)
    for x in range(order):
        vx = Vertex(*divmod(x, params.n))
        rep = reps[symmetry.orbit(vx).value]
        g = symmetry.transporter(params, vx, divmod(rep, params.n))
        sep[x] = rows[rep][g.permutation()]
    return sep


def decide_2sc(graph: HtgGraph, max_order: int = DEFAULT_MAX_ORDER, mode: str = "all-pairs", jobs: int = 1) -> DecisionReport:
    """Exhaustive separability matrix and the 2-spanning-cyclability verdict."""
    _check_size(graph, max_order)
    scan = _scan_all(graph, jobs)
    order = graph.order
    masks = list(scan.masks)
    if mode == "all-pairs":
        sep = _all_pairs(masks, order)
    elif mode == "base-vertex":
        sep = _base_vertex(graph.params, masks, order)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    np.fill_diagonal(sep, False)
    sep.setflags(write=False)
    counter = None
    upper = np.triu(~sep, k=1)
    if upper.any():
        a, b = np.argwhere(upper)[0]
        counter = (graph.vertex(int(a)), graph.vertex(int(b)))
    return DecisionReport(
        params=graph.params,
        separable=sep,
        is_2sc=counter is None,
        witness_counts=len(masks),
        factor_count=scan.factors,
        counterexample=counter,
        pairs_checked=order * (order - 1) // 2,
        mode=mode,
    )


def report_json(report: DecisionReport) -> str:
    return json.dumps(report.to_json(), separators=(",", ":")) + "\n"


# -- survey --------------------------------------------------------------------


@dataclass(frozen=True)
class SurveyRow:
    n: int
    verdict: str  # yes | no | invalid | too-large
    counterexample: tuple[Vertex, Vertex] | None = None
    note: str = ""


def survey(ell: int, m: int, n_values: Iterable[int], max_order: int = DEFAULT_MAX_ORDER, jobs: int = 1) -> list[SurveyRow]:
    """Classify HTG(m,n,ell) for each even n; invalid or oversized rows are reported, not raised."""
    rows = []
    for n in n_values:
        if n % 2:
            continue
        try:
            params = validate(m, n, ell)
        except ValidationError as exc:
            rows.append(SurveyRow(n, "invalid", note=type(exc).__name__))
            continue
        try:
            report = decide_2sc(build_graph(params), max_order=max_order, jobs=jobs)
        except TooLarge:
            rows.append(SurveyRow(n, "too-large", note=f"order {params.order}"))
            continue
        rows.append(SurveyRow(n, "yes" if report.is_2sc else "no", report.counterexample))
    return rows


def _pair_text(pair: tuple[Vertex, Vertex] | None) -> str:
    return "" if pair is None else f"{pair[0]} {pair[1]}"


def survey_text(ell: int, m: int, rows: list[SurveyRow]) -> str:
    header = ("n", "params", "2sc", "counterexample")
    table = [header] + [
        (str(r.n), f"HTG({m},{r.n},{ell})", r.verdict, _pair_text(r.counterexample) or r.note) for r in rows
    ]
    widths = [max(len(row[k]) for row in table) for k in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    return "\n".join(lines) + "\n"


def survey_csv(ell: int, m: int, rows: list[SurveyRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["m", "n", "ell", "2sc", "counterexample", "note"])
    for r in rows:
        writer.writerow([m, r.n, ell, r.verdict, _pair_text(r.counterexample), r.note])
    return buf.getvalue()
