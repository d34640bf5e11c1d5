"""Deterministic backtracking for Hamiltonian paths and cycles on vertex subsets.

Used where a construction leaves a cycle "to the reader": neighbours are tried
smallest flattened index first, so the result is reproducible.
"""

from __future__ import annotations

from ..core import HtgGraph


def hamiltonian_path(graph: HtgGraph, vertices: set[int], start: int, end: int) -> list[int] | None:
    """A path from ``start`` to ``end`` visiting exactly ``vertices`` (both ends included)."""
    if start not in vertices or end not in vertices:
        return None
    if start == end:
        return [start] if len(vertices) == 1 else None
    adj = {v: [w for w in graph.adjacency[v] if w in vertices] for v in vertices}
    total = len(vertices)
    path = [start]
    visited = {start}
    stack = [iter(adj[start])]

    def dead_end(u: int, cur: int) -> bool:
        # after leaving u for cur, unvisited neighbours of u lost a free neighbour
        for w in adj[u]:
            if w in visited:
                continue
            free = sum(1 for x in adj[w] if x not in visited or x == cur)
            if free < (1 if w == end else 2):
                return True
        return False

    while stack:
        for w in stack[-1]:
            if w in visited:
                continue
            if w == end and len(path) + 1 != total:
                continue
            path.append(w)
            visited.add(w)
            if w == end:
                return path
            if dead_end(path[-2], w):
                visited.discard(w)
                path.pop()
                continue
            stack.append(iter(adj[w]))
            break
        else:
            stack.pop()
            if len(path) > 1:
                visited.discard(path.pop())
    return None


def hamiltonian_cycle(graph: HtgGraph, vertices: set[int]) -> list[int] | None:
    """A cycle through exactly ``vertices``, starting at the smallest one."""
    if len(vertices) < 3:
        return None
    s = min(vertices)
    for e in graph.adjacency[s]:
        if e in vertices:
            path = hamiltonian_path(graph, vertices, s, e)
            if path is not None:
                return path
    return None
