"""2-factors, their cycle decomposition, separation, and certificate JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import jsonschema
import numpy as np

from .core import HtgGraph, HtgParams, Vertex, build_graph, validate
from .errors import (
    HtgError,
    NotAnEdge,
    NotSpanning,
    SameVertex,
    SchemaError,
    ValidationError,
    VerificationFailed,
)

EdgeKey = tuple[int, int]


@dataclass(frozen=True)
class TwoFactor:
    """A spanning 2-regular edge set of HTG(params).

    ``cycles`` lists each cycle as flattened vertex indices, starting at its
    smallest vertex and heading toward the smaller of that vertex's two
    factor-neighbours; cycles are ordered by their smallest vertex.
    """

    params: HtgParams
    edges: frozenset[EdgeKey]
    cycles: tuple[tuple[int, ...], ...]
    labels: np.ndarray = field(repr=False, compare=False)

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    def cycle_lengths(self) -> list[int]:
        return sorted(len(c) for c in self.cycles)

    def cycle_index(self, v: Vertex | tuple[int, int]) -> int:
        return int(self.labels[v[0] * self.params.n + v[1]])

    def vertex_cycles(self) -> list[list[Vertex]]:
        n = self.params.n
        return [[Vertex(*divmod(k, n)) for k in c] for c in self.cycles]

    def edge_pairs(self) -> list[tuple[Vertex, Vertex]]:
        n = self.params.n
        return [(Vertex(*divmod(a, n)), Vertex(*divmod(b, n))) for a, b in sorted(self.edges)]


def _decompose(params: HtgParams, edges: frozenset[EdgeKey]) -> tuple[tuple[tuple[int, ...], ...], np.ndarray]:
    order = params.order
    ends = np.array(list(edges), dtype=np.int64).reshape(-1, 2)
    src = np.concatenate([ends[:, 0], ends[:, 1]])
    dst = np.concatenate([ends[:, 1], ends[:, 0]])
    degree = np.bincount(src, minlength=order)
    bad = np.flatnonzero(degree != 2)
    if bad.size:
        k = int(bad[0])
        raise NotSpanning(Vertex(*divmod(k, params.n)), int(degree[k]))
    nbrs = dst[np.argsort(src, kind="stable")].reshape(order, 2)
    nbrs.sort(axis=1)
    lo, hi = nbrs[:, 0].tolist(), nbrs[:, 1].tolist()

    label = [-1] * order
    cycles = []
    for start in range(order):
        if label[start] >= 0:
            continue
        cid = len(cycles)
        cycle = [start]
        label[start] = cid
        prev, cur = start, lo[start]
        while cur != start:
            cycle.append(cur)
            label[cur] = cid
            nxt = hi[cur] if lo[cur] == prev else lo[cur]
            prev, cur = cur, nxt
        cycles.append(tuple(cycle))
    labels = np.array(label, dtype=np.int64)
    labels.setflags(write=False)
    return tuple(cycles), labels


def from_edges_unchecked(params: HtgParams, edges: Iterable[EdgeKey]) -> TwoFactor:
    """Build a TwoFactor without checking graph membership (valency is still checked)."""
    edges = frozenset(edges)
    cycles, labels = _decompose(params, edges)
    return TwoFactor(params, edges, cycles, labels)


def verify_factor(graph: HtgGraph, edges: Iterable) -> TwoFactor:
    """Validate ``edges`` as a 2-factor of ``graph``.

    ``edges`` may hold flattened index pairs or pairs of ``(i, j)`` vertices.
    Raises :class:`NotAnEdge` for a foreign edge and :class:`NotSpanning` for the
    first vertex (in flattened order) whose valency is not 2.
    """
    edges = list(edges)
    try:
        # index pairs, the common case
        flat = [(int(a), int(b)) if a < b else (int(b), int(a)) for a, b in edges]
    except (TypeError, ValueError):
        flat = []
        for e in edges:
            a, b = e[0], e[1]
            if not isinstance(a, (int, np.integer)):
                a, b = _flat(graph, a), _flat(graph, b)
            flat.append((int(a), int(b)) if a < b else (int(b), int(a)))
    keys = set(flat)
    if not keys <= graph.kinds.keys():
        a, b = next(k for k in flat if k not in graph.kinds)
        raise NotAnEdge(divmod(a, graph.params.n), divmod(b, graph.params.n))
    return from_edges_unchecked(graph.params, keys)


def _flat(graph: HtgGraph, v) -> int:
    try:
        return graph.index(v)
    except HtgError as exc:
        raise VerificationFailed(str(exc)) from exc


def cycle_edges(params: HtgParams, walk: Iterable[tuple[int, int]], closed: bool = True) -> list[EdgeKey]:
    """Edge keys along a vertex walk given as ``(i, j)`` pairs (levels taken mod n)."""
    n = params.n
    idx = [i * n + j % n for i, j in walk]
    pairs = list(zip(idx, idx[1:]))
    if closed and idx[0] != idx[-1]:
        pairs.append((idx[-1], idx[0]))
    return [(a, b) if a < b else (b, a) for a, b in pairs]


def separates(factor: TwoFactor, x: Vertex | tuple[int, int], y: Vertex | tuple[int, int]) -> bool:
    """True iff the factor has exactly two cycles and x, y lie on different ones."""
    if tuple(x) == tuple(y):
        raise SameVertex(f"cannot separate {Vertex(*x)} from itself")
    return factor.num_cycles == 2 and factor.cycle_index(x) != factor.cycle_index(y)


# -- certificates --------------------------------------------------------------


@dataclass(frozen=True)
class SeparationCertificate:
    params: HtgParams
    pair: tuple[Vertex, Vertex]
    factor: TwoFactor
    provenance: str

    def check(self) -> None:
        """Raise VerificationFailed unless the factor separates the pair."""
        if self.factor.num_cycles != 2:
            raise VerificationFailed(f"factor has {self.factor.num_cycles} cycles, expected 2")
        if not separates(self.factor, *self.pair):
            raise VerificationFailed(f"{self.pair[0]} and {self.pair[1]} lie on the same cycle")


_VERTEX = {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}

CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["params", "pair", "edges", "provenance"],
    "additionalProperties": False,
    "properties": {
        "params": {
            "type": "object",
            "required": ["m", "n", "ell"],
            "additionalProperties": False,
            "properties": {k: {"type": "integer"} for k in ("m", "n", "ell")},
        },
        "pair": {"type": "array", "items": _VERTEX, "minItems": 2, "maxItems": 2},
        "edges": {"type": "array", "items": {"type": "array", "items": _VERTEX, "minItems": 2, "maxItems": 2}},
        "provenance": {"type": "string"},
    },
}


def encode_certificate(cert: SeparationCertificate) -> str:
    obj = {
        "params": cert.params.to_json(),
        "pair": [list(cert.pair[0]), list(cert.pair[1])],
        "edges": [[list(a), list(b)] for a, b in cert.factor.edge_pairs()],
        "provenance": cert.provenance,
    }
    return json.dumps(obj, indent=None, separators=(",", ":")) + "\n"


def decode_certificate(text: str) -> SeparationCertificate:
    """Parse certificate JSON and re-verify it against a freshly built graph."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(obj, CERTIFICATE_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(exc.message) from exc

    p = obj["params"]
    try:
        params = validate(p["m"], p["n"], p["ell"])
    except ValidationError as exc:
        raise SchemaError(f"invalid params: {exc}") from exc
    graph = build_graph(params)
    pair = tuple(Vertex(*v) for v in obj["pair"])
    for v in pair:
        _flat(graph, v)
    factor = verify_factor(graph, [tuple(map(tuple, e)) for e in obj["edges"]])
    if len(factor.edges) != len(obj["edges"]):
        raise SchemaError("duplicate edges in certificate")
    if pair[0] == pair[1]:
        raise VerificationFailed("certificate pair repeats a vertex")
    cert = SeparationCertificate(params, pair, factor, obj["provenance"])
    cert.check()
    return cert
