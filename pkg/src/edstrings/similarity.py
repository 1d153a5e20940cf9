"""Similarity measures between two ED strings built on the intersection graph."""

from __future__ import annotations

from .core import CapExceeded, EDString
from .graph import IntersectionGraph, PathAutomaton, build_augmented
from .lcpindex import build_arena, build_index

DEFAULT_PRODUCT_BUDGET = 100_000_000


def _longest_match_values(graph: IntersectionGraph) -> dict:
    """Per node, the weight of the heaviest path leaving it, with the best
    outgoing edge for witness reconstruction."""
    best: dict = {}
    choice: dict = {}
    for node in reversed(graph.topo_nodes()):
        top = 0
        pick = None
        for e in graph.out.get(node, ()):
            cand = e.length + best.get(e.dst, 0)
            if cand > top:
                top = cand
                pick = e
        best[node] = top
        choice[node] = pick
    return {"best": best, "choice": choice}


def matching_statistics(t1: EDString, t2: EDString) -> list[int]:
    """ms[i]: length of the longest prefix of any string producible from
    segments i.. of t1 that occurs inside some string of L(t2)."""
    graph = build_augmented(t1, t2, "forward")
    best = _longest_match_values(graph)["best"]
    ms = [0] * t1.n
    for node, value in best.items():
        a, _b = node
        if graph.auto1.is_explicit(a) and a <= t1.n and value > ms[a - 1]:
            ms[a - 1] = value
    return ms


def _spell_from(graph: IntersectionGraph, tables, node, length: int) -> str:
    out = []
    got = 0
    while got < length:
        e = tables["choice"][node]
        out.append(graph.label(e))
        got += e.length
        node = e.dst
    return "".join(out)


def _single_variant_lcs(t1: EDString, t2: EDString) -> tuple[int, str]:
    """Longest factor common to one variant of each input, via the shared
    suffix order (covers matches that never touch an explicit state)."""
    arena = build_arena((t1, t2))
    idx = build_index(arena)
    best, at = 0, 0
    last = [-1, -1]  # most recent suffix per input in suffix order
    source = arena.source
    for r in range(len(arena)):
        pos = int(idx.sa[r])
        sid = int(source[pos])
        if sid < 0:
            continue
        other = last[1 - sid]
        if other >= 0:
            ell = idx.lcp(pos, other)
            if ell > best:
                best, at = ell, pos
        last[sid] = pos
    return best, arena.decode(at, best)


def longest_common_substring(t1: EDString, t2: EDString) -> tuple[int, str]:
    """Longest string occurring inside a member of each language."""
    graph = build_augmented(t1, t2, "both")
    tables = _longest_match_values(graph)
    best_node, best_len = None, 0
    for node, value in tables["best"].items():
        if value > best_len:
            best_node, best_len = node, value
    fallback_len, fallback_str = _single_variant_lcs(t1, t2)
    if fallback_len > best_len:
        return fallback_len, fallback_str
    if best_node is None:
        return 0, ""
    return best_len, _spell_from(graph, tables, best_node, best_len)


def longest_common_subsequence(
        t1: EDString, t2: EDString,
        budget: int = DEFAULT_PRODUCT_BUDGET) -> tuple[int, str]:
    """Longest string that is a subsequence of a member of each language.

    Runs on the uncompacted product where matching a letter on both sides
    weighs 1 and skipping a letter (or an empty production) on either side
    weighs 0.  Refuses when the product exceeds ``budget`` state pairs.
    """
    auto1, auto2 = PathAutomaton(t1), PathAutomaton(t2)
    if auto1.num_states * auto2.num_states > budget:
        raise CapExceeded("uncompacted product exceeds budget")
    steps1, steps2 = auto1.letter_steps(), auto2.letter_steps()
    order1, order2 = auto1.topo_states(), auto2.topo_states()
    index1 = {s: r for r, s in enumerate(order1)}
    index2 = {s: r for r, s in enumerate(order2)}
    neg = -1
    dp = [[neg] * len(order2) for _ in order1]
    parent: dict = {}
    dp[index1[1]][index2[1]] = 0
    for r1, x in enumerate(order1):
        row = dp[r1]
        for r2, y in enumerate(order2):
            d = row[r2]
            if d < 0:
                continue
            for c1, x2 in steps1[x]:
                nr1 = index1[x2]
                # skip / empty-production move on the first side
                if dp[nr1][r2] < d:
                    dp[nr1][r2] = d
                    parent[(x2, y)] = (x, y, None)
                if c1 is None:
                    continue
                for c2, y2 in steps2[y]:
                    if c2 == c1:
                        nr2 = index2[y2]
                        if dp[nr1][nr2] < d + 1:
                            dp[nr1][nr2] = d + 1
                            parent[(x2, y2)] = (x, y, c1)
            for c2, y2 in steps2[y]:
                nr2 = index2[y2]
                if dp[r1][nr2] < d:
                    dp[r1][nr2] = d
                    parent[(x, y2)] = (x, y, None)
    goal = (auto1.n + 1, auto2.n + 1)
    length = dp[index1[goal[0]]][index2[goal[1]]]
    if length < 0:
        return 0, ""
    letters = []
    node = goal
    while node != (1, 1):
        px, py, c = parent[node]
        if c is not None:
            letters.append(c)
        node = (px, py)
    letters.reverse()
    return length, "".join(letters)
