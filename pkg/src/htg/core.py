"""Honeycomb toroidal graphs HTG(m, n, ell): parameters, construction, DOT export.

Vertices are ``Vertex(i, j)`` with column ``i`` in ``[0, m)`` and level ``j`` in
``[0, n)``.  Internally every vertex is flattened to ``i * n + j`` and an edge is
the sorted pair of flattened endpoints.
"""

from __future__ import annotations

import enum
import functools
import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, NamedTuple

from .errors import BadN, BadParity, MismatchedFactor, Multigraph, OutOfRange

if TYPE_CHECKING:
    from .factor import TwoFactor


class Vertex(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"u_{{{self.i},{self.j}}}"


class EdgeKind(str, enum.Enum):
    VERTICAL = "vertical"
    FLAT = "flat"
    JUMP = "jump"


class Edge(NamedTuple):
    a: Vertex
    b: Vertex
    kind: EdgeKind


@dataclass(frozen=True)
class HtgParams:
    m: int
    n: int
    ell: int

    @property
    def order(self) -> int:
        return self.m * self.n

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "ell": self.ell}

    @classmethod
    def from_json(cls, obj: dict) -> HtgParams:
        return validate(obj["m"], obj["n"], obj["ell"])

    def __str__(self) -> str:
        return f"HTG({self.m},{self.n},{self.ell})"


def validate(m: int, n: int, ell: int) -> HtgParams:
    """Check the defining constraints and return the parameter triple."""
    if n % 2 or n < 4:
        raise BadN(f"n must be even and at least 4, got n={n}")
    if m < 1:
        raise OutOfRange(f"m must be positive, got m={m}")
    if not 0 <= ell <= n - 1:
        raise OutOfRange(f"ell must lie in [0, {n - 1}], got ell={ell}")
    if (m - ell) % 2:
        raise BadParity(f"m - ell must be even, got m={m}, ell={ell}")
    if m == 1 and ell in (1, n - 1):
        raise Multigraph(f"HTG(1,{n},{ell}) is a multigraph")
    return HtgParams(m, n, ell)


def canonicalize(params: HtgParams) -> HtgParams:
    """Replace ell by min(ell, n - ell); HTG(m,n,ell) and HTG(m,n,n-ell) are isomorphic."""
    ell = min(params.ell, (params.n - params.ell) % params.n)
    return HtgParams(params.m, params.n, ell)


def flip_levels(params: HtgParams, v: Vertex) -> Vertex:
    """The isomorphism HTG(m,n,ell) -> HTG(m,n,n-ell), u_{i,j} -> u_{i,-j}.

    It is an involution, so the same map carries vertices back.
    """
    return Vertex(v.i, (-v.j) % params.n)


@dataclass(frozen=True)
class HtgGraph:
    params: HtgParams
    edges: tuple[tuple[int, int], ...]
    kinds: dict[tuple[int, int], EdgeKind] = field(repr=False, compare=False)
    adjacency: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.params.order

    def index(self, v: Vertex | tuple[int, int]) -> int:
        i, j = v
        m, n = self.params.m, self.params.n
        if not (0 <= i < m and 0 <= j < n):
            raise OutOfRange(f"vertex ({i},{j}) is not in {self.params}")
        return i * n + j

    def vertex(self, idx: int) -> Vertex:
        return Vertex(*divmod(idx, self.params.n))

    def vertices(self) -> list[Vertex]:
        return [self.vertex(k) for k in range(self.order)]

    def neighbors(self, v: Vertex | tuple[int, int]) -> list[tuple[Vertex, EdgeKind]]:
        a = self.index(v)
        return [(self.vertex(b), self.kinds[_key(a, b)]) for b in self.adjacency[a]]

    def has_edge(self, a: int, b: int) -> bool:
        return _key(a, b) in self.kinds

    def edge_list(self) -> list[Edge]:
        return [Edge(self.vertex(a), self.vertex(b), self.kinds[(a, b)]) for a, b in self.edges]


def _key(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@functools.lru_cache(maxsize=256)
def build_graph(params: HtgParams) -> HtgGraph:
    m, n, ell = params.m, params.n, params.ell
    kinds: dict[tuple[int, int], EdgeKind] = {}

    def add(a: tuple[int, int], b: tuple[int, int], kind: EdgeKind) -> None:
        ka = a[0] * n + a[1] % n
        kb = b[0] * n + b[1] % n
        kinds.setdefault(_key(ka, kb), kind)

    for i in range(m):
        for j in range(n):
            add((i, j), (i, j + 1), EdgeKind.VERTICAL)
            if i <= m - 2 and (i + j) % 2 == 1:
                add((i, j), (i + 1, j), EdgeKind.FLAT)
    for j in range(n):
        if j % 2 == m % 2:
            add((m - 1, j), (0, j + ell), EdgeKind.JUMP)

    adjacency: list[list[int]] = [[] for _ in range(m * n)]
    for a, b in kinds:
        adjacency[a].append(b)
        adjacency[b].append(a)
    # the constraints in validate() guarantee this; guard against misuse with raw HtgParams
    assert all(len(nb) == 3 for nb in adjacency), f"{params} is not cubic"
    return HtgGraph(
        params=params,
        edges=tuple(sorted(kinds)),
        kinds=kinds,
        adjacency=tuple(tuple(sorted(nb)) for nb in adjacency),
    )


def params_json(params: HtgParams) -> str:
    return json.dumps(params.to_json(), sort_keys=False)


def graph_json(graph: HtgGraph) -> dict:
    return {
        "params": graph.params.to_json(),
        "edges": [[list(e.a), list(e.b), e.kind.value] for e in graph.edge_list()],
    }


_KIND_STYLE = {
    EdgeKind.VERTICAL: "solid",
    EdgeKind.FLAT: "solid",
    EdgeKind.JUMP: "dashed",
}


def export_dot(graph: HtgGraph, highlight: TwoFactor | None = None) -> str:
    """Render the graph as DOT text for ``neato -n``.

    Columns run left to right and levels bottom to top.  Edges of ``highlight``
    are drawn bold red; the remaining edges are grey.
    """
    chosen: frozenset[tuple[int, int]] = frozenset()
    if highlight is not None:
        if highlight.params != graph.params:
            raise MismatchedFactor(f"factor belongs to {highlight.params}, not {graph.params}")
        if not highlight.edges <= set(graph.kinds):
            raise MismatchedFactor("factor uses edges that are not in the graph")
        chosen = highlight.edges

    p = graph.params
    lines = [
        f'graph "HTG({p.m},{p.n},{p.ell})" {{',
        "  graph [splines=true, outputorder=edgesfirst];",
        '  node [shape=circle, width=0.3, fixedsize=true, fontsize=8];',
    ]
    for k in range(graph.order):
        v = graph.vertex(k)
        lines.append(f'  u_{v.i}_{v.j} [label="{v.i},{v.j}", pos="{v.i * 72},{v.j * 54}!"];')
    for a, b in graph.edges:
        va, vb = graph.vertex(a), graph.vertex(b)
        style = _KIND_STYLE[graph.kinds[(a, b)]]
        if (a, b) in chosen:
            attrs = f'style={style}, color="red", penwidth=2.5'
        else:
            attrs = f'style={style}, color="gray60"'
        lines.append(f"  u_{va.i}_{va.j} -- u_{vb.i}_{vb.j} [{attrs}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
