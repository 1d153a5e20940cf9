"""Language intersection of two ED strings: decision, witnesses, counting."""

from __future__ import annotations

from dataclasses import dataclass

from .core import EDString
from .graph import EXACT, FULL, PS, IntersectionGraph, build_full, reachability


@dataclass(frozen=True)
class WitnessResult:
    found: bool
    witness: str | None = None
    length: int | None = None


def intersect_decide(t1: EDString, t2: EDString) -> bool:
    """Whether L(t1) and L(t2) share a string (streamed reachability)."""
    return reachability(t1, t2).accept


def _spell(graph: IntersectionGraph, path) -> str:
    return "".join(graph.label(e) for e in path)


def witness(t1: EDString, t2: EDString) -> WitnessResult:
    """Some string of the intersection, or not-found.

    Depth-first over the graph in adjacency order, so the result is
    deterministic for a given input order.
    """
    graph = build_full(t1, t2)
    parent: dict = {graph.start: None}
    stack = [graph.start]
    while stack:
        node = stack.pop()
        if node == graph.accept:
            path = []
            while parent[node] is not None:
                edge = parent[node]
                path.append(edge)
                node = edge.src
            path.reverse()
            s = _spell(graph, path)
            return WitnessResult(True, s, len(s))
        for e in reversed(graph.out.get(node, ())):
            if e.dst not in parent:
                parent[e.dst] = e
                stack.append(e.dst)
    return WitnessResult(False)


def _extreme_witness(t1: EDString, t2: EDString, longest: bool) -> WitnessResult:
    graph = build_full(t1, t2)
    order = graph.topo_nodes()
    better = (lambda a, b: a > b) if longest else (lambda a, b: a < b)
    dist: dict = {graph.start: 0}
    parent: dict = {}
    for node in order:
        if node not in dist:
            continue
        d = dist[node]
        for e in graph.out.get(node, ()):
            nd = d + e.length
            if e.dst not in dist or better(nd, dist[e.dst]):
                dist[e.dst] = nd
                parent[e.dst] = e
    if graph.accept not in dist:
        return WitnessResult(False)
    path = []
    node = graph.accept
    while node != graph.start:
        e = parent[node]
        path.append(e)
        node = e.src
    path.reverse()
    s = _spell(graph, path)
    return WitnessResult(True, s, len(s))


def shortest_witness(t1: EDString, t2: EDString) -> WitnessResult:
    """A minimum-length member of the intersection (FAIL when empty)."""
    return _extreme_witness(t1, t2, longest=False)


def longest_witness(t1: EDString, t2: EDString) -> WitnessResult:
    """A maximum-length member of the intersection (FAIL when empty)."""
    return _extreme_witness(t1, t2, longest=True)


def count_matching_pairs(t1: EDString, t2: EDString) -> int:
    """Number of alignment pairs producing the same string, exactly.

    Counts paths that never take a diagonal epsilon edge and never follow a
    horizontal epsilon edge with a vertical one, which puts paths in
    one-to-one correspondence with alignment pairs.  Three per-node tallies
    track how the incoming path ended: with a letter edge, a horizontal
    epsilon edge, or a vertical epsilon edge.
    """
    graph = build_full(t1, t2)
    plain: dict = {graph.start: 1}
    horiz: dict = {}
    vert: dict = {}
    for node in graph.topo_nodes():
        p = plain.get(node, 0)
        h = horiz.get(node, 0)
        v = vert.get(node, 0)
        if not (p or h or v):
            continue
        for e in graph.out.get(node, ()):
            if e.length > 0:
                plain[e.dst] = plain.get(e.dst, 0) + p + h + v
            elif e.kind == PS:
                horiz[e.dst] = horiz.get(e.dst, 0) + p + h + v
            elif e.kind == FULL:
                vert[e.dst] = vert.get(e.dst, 0) + p + v
            # diagonal epsilon edges (kind EXACT, length 0) are skipped
    acc = graph.accept
    return plain.get(acc, 0) + horiz.get(acc, 0) + vert.get(acc, 0)
