"""Doubly elastic-degenerate matching and approximate comparison.

Grid convention: the text is always the first coordinate.  An occurrence is
charged to the segment holding its last consumed text letter (occurrences
consuming no text letter are charged to the state they sit at, and dropped
when that state is the initial one); start segments come from running the
end-segment computation on the reversed inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CapExceeded, EDString
from .graph import PathAutomaton, build_full
from .lcpindex import build_arena, build_index
from .similarity import DEFAULT_PRODUCT_BUDGET

INF = float("inf")


@dataclass(frozen=True)
class OccurrenceReport:
    end_segments: tuple[int, ...]
    start_segments: tuple[int, ...]

    def __bool__(self) -> bool:
        return bool(self.end_segments)


@dataclass(frozen=True)
class DistanceResult:
    finite: bool
    distance: int | None = None
    pair: tuple[str, str] | None = None


class DialQueue:
    """Bucket queue for Dijkstra with small integer weights."""

    def __init__(self, bound: int):
        self.buckets: list[list] = [[] for _ in range(bound + 1)]
        self.cur = 0
        self.bound = bound

    def push(self, dist: int, item):
        if dist <= self.bound:
            self.buckets[dist].append(item)

    def pop(self):
        while self.cur <= self.bound:
            bucket = self.buckets[self.cur]
            if bucket:
                return self.cur, bucket.pop()
            self.cur += 1
        return None


def _segment_after(auto: PathAutomaton, state: int) -> int | None:
    """Segment of the letter ending at ``state``; None at the initial state."""
    if auto.is_explicit(state):
        return state - 1 if state >= 2 else None
    return auto.segment_of(state)


def _eps_completable(eds: EDString) -> list[bool]:
    """Per explicit state s (1-based list, index s), whether the remaining
    segments can all produce the empty string."""
    n = eds.n
    flags = [False] * (n + 2)
    flags[n + 1] = True
    for s in range(n, 0, -1):
        flags[s] = flags[s + 1] and ("" in eds.segments[s - 1])
    return flags


# -- exact doubly ED string matching ---------------------------------------

def _end_segments(pattern: EDString, text: EDString) -> tuple[bool, set[int]]:
    graph = build_full(text, pattern)
    auto_t, auto_p = graph.auto1, graph.auto2
    accept_col = auto_p.n + 1
    starts = [(k, 1) for k in auto_t.all_states()]
    reach = graph.reachable_from(starts)
    decide = any(b == accept_col for (_a, b) in reach)
    ends: set[int] = set()
    if _language_has_empty(pattern):
        ends.update(range(1, auto_t.n + 1))
    comp = _eps_completable(pattern)
    for e in graph.edges:
        if e.length == 0 or e.src not in reach:
            continue
        k, v = e.dst
        if auto_p.is_explicit(v) and comp[v]:
            seg = _segment_after(auto_t, k)
            if seg is not None and seg <= auto_t.n:
                ends.add(seg)
    return decide, ends


def _language_has_empty(t: EDString) -> bool:
    return all("" in seg for seg in t.segments)


def doubly_edsm(pattern: EDString, text: EDString, mode: str = "decide"):
    """Whether some member of L(pattern) occurs inside a member of L(text);
    ``mode='report'`` also lists the segments where occurrences end/start."""
    decide, ends = _end_segments(pattern, text)
    if mode == "decide":
        return decide
    if mode != "report":
        raise ValueError("mode must be 'decide' or 'report'")
    _, rev_ends = _end_segments(pattern.reverse(), text.reverse())
    starts = {text.n + 1 - s for s in rev_ends}
    return OccurrenceReport(tuple(sorted(ends)), tuple(sorted(starts)))


# -- approximate intersection (uncompacted product) -------------------------

def _product_moves(steps1, steps2, metric):
    """Move generator factory: ((x, y)) -> iterable of
    (next, weight, consumed1, consumed2)."""
    edit = metric == "edit"

    def moves(node):
        x, y = node
        s2 = steps2[y]
        for c1, x2 in steps1[x]:
            if c1 is None:
                yield (x2, y), 0, None, None
                continue
            if edit:
                yield (x2, y), 1, c1, None
            for c2, y2 in s2:
                if c2 is not None:
                    yield (x2, y2), (0 if c1 == c2 else 1), c1, c2
        for c2, y2 in s2:
            if c2 is None:
                yield (x, y2), 0, None, None
            elif edit:
                yield (x, y2), 1, None, c2

    return moves


def _dial_run(sources, moves, bound, goals=None):
    """Multi-source Dijkstra over 0/1.. integer weights.

    Returns (dist, parent); parent maps node -> (prev, consumed1, consumed2).
    """
    dist: dict = {}
    parent: dict = {}
    queue = DialQueue(bound)
    for s in sources:
        dist[s] = 0
        queue.push(0, s)
    while True:
        top = queue.pop()
        if top is None:
            break
        d, node = top
        if dist.get(node, INF) != d:
            continue
        for nxt, w, c1, c2 in moves(node):
            nd = d + w
            if nd <= bound and nd < dist.get(nxt, INF):
                dist[nxt] = nd
                parent[nxt] = (node, c1, c2)
                queue.push(nd, nxt)
    return dist, parent


def _backtrack(parent, sources, node):
    s1: list[str] = []
    s2: list[str] = []
    while node not in sources:
        node, c1, c2 = parent[node]
        if c1:
            s1.append(c1)
        if c2:
            s2.append(c2)
    return "".join(reversed(s1)), "".join(reversed(s2))


def approx_intersect(t1: EDString, t2: EDString, metric: str = "edit",
                     budget: int = DEFAULT_PRODUCT_BUDGET) -> DistanceResult:
    """Minimum Hamming/edit distance over L(t1) x L(t2), with an achieving
    pair.  Hamming is infinite when no equal-length pair exists."""
    _check_metric(metric)
    auto1, auto2 = PathAutomaton(t1), PathAutomaton(t2)
    if auto1.num_states * auto2.num_states > budget:
        raise CapExceeded("uncompacted product exceeds budget")
    steps1, steps2 = auto1.letter_steps(), auto2.letter_steps()
    bound = (t1.size + t2.size + 1)
    start = (1, 1)
    goal = (auto1.n + 1, auto2.n + 1)
    dist, parent = _dial_run([start], _product_moves(steps1, steps2, metric),
                             bound)
    if goal not in dist:
        return DistanceResult(False)
    s1, s2 = _backtrack(parent, {start}, goal)
    return DistanceResult(True, dist[goal], (s1, s2))


def _check_metric(metric: str):
    if metric not in ("hamming", "edit"):
        raise ValueError("metric must be 'hamming' or 'edit'")


# -- bounded variants on the compacted graph --------------------------------

def _hamming_prefix(idx, pos_a, len_a, pos_b, len_b, k):
    """Mismatches of the two equal-length slices, or None beyond ``k``
    (length mismatch is None as well).  At most k+1 lcp queries."""
    if len_a != len_b:
        return None
    count = 0
    done = 0
    while done < len_a:
        ell = idx.lcp(pos_a + done, pos_b + done)
        if ell >= len_a - done:
            break
        done += ell + 1
        count += 1
        if count > k:
            return None
    return count


def _edit_prefix_dists(a: str, b: str, k: int) -> list:
    """d(a, b[:x]) for x in [0, min(|b|, |a|+k)], clamped to None above k."""
    hi = min(len(b), len(a) + k)
    big = k + 1
    prev = [x if x <= k else big for x in range(hi + 1)]
    for i in range(1, len(a) + 1):
        cur = [big] * (hi + 1)
        if i <= k:
            cur[0] = i
        lo = max(1, i - k)
        up = min(hi, i + k)
        ai = a[i - 1]
        for x in range(lo, up + 1):
            best = prev[x] + 1
            alt = cur[x - 1] + 1
            if alt < best:
                best = alt
            alt = prev[x - 1] + (ai != b[x - 1])
            if alt < best:
                best = alt
            if best < big:
                cur[x] = best
        prev = cur
    return [d if d <= k else None for d in prev]


class _WeightedGraph:
    """Compacted intersection graph with error-tolerant weighted edges.

    Parallel edges between the same endpoints are collapsed to the
    minimum weight, which preserves shortest-path values; the cheapest
    weight among edges that consume first-side letters is kept alongside,
    because occurrence reports attribute ends to such edges.
    """

    def __init__(self, t1: EDString, t2: EDString, metric: str, k: int):
        _check_metric(metric)
        self.t1, self.t2 = t1, t2
        self.metric, self.k = metric, k
        self.auto1, self.auto2 = PathAutomaton(t1), PathAutomaton(t2)
        self.arena = build_arena((t1, t2))
        self.idx = build_index(self.arena)
        # adjacency: src -> {dst: (weight, consumed1, consumed2,
        #                          min weight among consuming edges | None)}
        self.out: dict = {}
        self._build()

    def _add(self, src, dst, w, c1, c2):
        slot = self.out.setdefault(src, {})
        old = slot.get(dst)
        wc = w if c1 else None
        if old is None:
            slot[dst] = (w, c1, c2, wc)
            return
        ow, oc1, oc2, owc = old
        best = (w, c1, c2) if w < ow else (ow, oc1, oc2)
        if wc is not None and (owc is None or wc < owc):
            new_wc = wc
        else:
            new_wc = owc
        slot[dst] = (*best, new_wc)

    def _pair_edges(self, src, i, v1, off1, j, v2, off2):
        """All weighted edges for one transition pair at ``src``."""
        t1, t2 = self.t1, self.t2
        a1, a2 = self.auto1, self.auto2
        k = self.k
        ell1 = t1.segments[i - 1][v1][off1:]
        ell2 = t2.segments[j - 1][v2][off2:]
        pos1 = self.arena.spans[(0, i - 1, v1)][0] + off1
        pos2 = self.arena.spans[(1, j - 1, v2)][0] + off2
        if self.metric == "hamming":
            if len(ell1) <= len(ell2):
                d = _hamming_prefix(self.idx, pos1, len(ell1), pos2,
                                    len(ell1), k)
                if d is not None:
                    dst = (i + 1, a2.state_at(j, v2, off2 + len(ell1)))
                    self._add(src, dst, d, ell1, ell2[:len(ell1)])
            if len(ell2) < len(ell1):
                d = _hamming_prefix(self.idx, pos2, len(ell2), pos1,
                                    len(ell2), k)
                if d is not None:
                    dst = (a1.state_at(i, v1, off1 + len(ell2)), j + 1)
                    self._add(src, dst, d, ell1[:len(ell2)], ell2)
            return
        for x, d in enumerate(_edit_prefix_dists(ell1, ell2, k)):
            if d is not None:
                dst = (i + 1, a2.state_at(j, v2, off2 + x))
                self._add(src, dst, d, ell1, ell2[:x])
        for x, d in enumerate(_edit_prefix_dists(ell2, ell1, k)):
            if d is not None and x < len(ell1):
                dst = (a1.state_at(i, v1, off1 + x), j + 1)
                self._add(src, dst, d, ell1[:x], ell2)

    def _build(self):
        t1, t2 = self.t1, self.t2
        a1, a2 = self.auto1, self.auto2
        n1, n2 = a1.n, a2.n
        edit = self.metric == "edit"
        for i in range(1, n1 + 1):
            seg1 = t1.segments[i - 1]
            for j in range(1, n2 + 1):
                seg2 = t2.segments[j - 1]
                # explicit-first sources (i, kstate)
                for v2, q in enumerate(seg2):
                    offs = range(len(q)) if q else (0,)
                    for off2 in offs:
                        src = (i, a2.state_at(j, v2, off2))
                        for v1, _p in enumerate(seg1):
                            self._pair_edges(src, i, v1, 0, j, v2, off2)
                # implicit-first sources (u, j)
                for v1, p in enumerate(seg1):
                    for off1 in range(1, len(p)):
                        src = (a1.state_at(i, v1, off1), j)
                        for v2, _q in enumerate(seg2):
                            self._pair_edges(src, i, v1, off1, j, v2, 0)
        # boundary column: the second input is exhausted, so first-side
        # words can only be skipped (empty production) or deleted -- also
        # partially, since occurrence windows may end inside a variant
        for i in range(1, n1 + 1):
            for v1, p in enumerate(t1.segments[i - 1]):
                if not p:
                    self._add((i, n2 + 1), (i + 1, n2 + 1), 0, "", "")
                    continue
                if not edit:
                    continue
                for off1 in range(len(p)):
                    src = (a1.state_at(i, v1, off1), n2 + 1)
                    for take in range(1, min(self.k, len(p) - off1) + 1):
                        dst = (a1.state_at(i, v1, off1 + take), n2 + 1)
                        self._add(src, dst, take, p[off1:off1 + take], "")
        # boundary row: insert/skip the rest of the second input
        for j in range(1, n2 + 1):
            for v2, q in enumerate(t2.segments[j - 1]):
                if not q:
                    self._add((n1 + 1, j), (n1 + 1, j + 1), 0, "", "")
                elif edit and len(q) <= self.k:
                    self._add((n1 + 1, j), (n1 + 1, j + 1), len(q), "", q)
                for off2 in range(1, len(q)):
                    rest = q[off2:]
                    if edit and len(rest) <= self.k:
                        self._add((n1 + 1, a2.state_at(j, v2, off2)),
                                  (n1 + 1, j + 1), len(rest), "", rest)

    def moves(self, node):
        for dst, (w, c1, c2, _wc) in self.out.get(node, {}).items():
            yield dst, w, c1, c2


def approx_intersect_bounded(t1: EDString, t2: EDString, metric: str,
                             k: int) -> DistanceResult:
    """Like :func:`approx_intersect` but only reports distances <= k,
    using the compacted graph with jump-computed edge weights."""
    if k < 1:
        raise ValueError("threshold must be at least 1")
    graph = _WeightedGraph(t1, t2, metric, k)
    start = (1, 1)
    goal = (graph.auto1.n + 1, graph.auto2.n + 1)
    dist, parent = _dial_run([start], graph.moves, k)
    if goal not in dist:
        return DistanceResult(False)
    s1, s2 = _backtrack(parent, {start}, goal)
    return DistanceResult(True, dist[goal], (s1, s2))


# -- approximate (doubly) EDSM ----------------------------------------------

def _pattern_completion_costs(pattern: EDString, metric: str,
                              auto: PathAutomaton) -> dict[int, float]:
    """Per pattern state: cheapest way to finish the pattern without moving
    the text (insertions for edit; only empty productions for Hamming)."""
    n = pattern.n
    exp = [INF] * (n + 2)
    exp[n + 1] = 0
    for s in range(n, 0, -1):
        best = INF
        for q in pattern.segments[s - 1]:
            cost = (len(q) if metric == "edit" else (0 if not q else INF))
            if cost + exp[s + 1] < best:
                best = cost + exp[s + 1]
        exp[s] = best
    costs: dict[int, float] = {}
    for state in auto.all_states():
        if auto.is_explicit(state):
            costs[state] = exp[state]
        else:
            s, v, off = auto.locate(state)
            rest = len(pattern.segments[s - 1][v]) - off
            costs[state] = (rest + exp[s + 1]) if metric == "edit" else INF
    return costs


def approx_edsm(pattern: EDString, text: EDString, metric: str = "edit",
                k: int | None = None,
                budget: int = DEFAULT_PRODUCT_BUDGET):
    """Minimum distance between a member of L(pattern) and a substring of a
    member of L(text), plus the segments where the qualifying occurrences
    end and start.

    With ``k`` the bounded machinery reports occurrences at distance <= k;
    without it, the segments achieving the minimum are reported.
    Returns (DistanceResult, OccurrenceReport).
    """
    _check_metric(metric)
    best, ends = _approx_end_segments(pattern, text, metric, k, budget)
    _rev, rev_ends = _approx_end_segments(pattern.reverse(), text.reverse(),
                                          metric, k, budget)
    starts = {text.n + 1 - s for s in rev_ends}
    report = OccurrenceReport(tuple(sorted(ends)), tuple(sorted(starts)))
    return best, report


def _approx_end_segments(pattern: EDString, text: EDString, metric: str,
                         k: int | None, budget: int):
    """(DistanceResult, end-segment set) for the text-first grid."""
    if k is None:
        return _approx_end_unbounded(pattern, text, metric, budget)
    return _approx_end_bounded(pattern, text, metric, k)


def _approx_end_unbounded(pattern: EDString, text: EDString, metric: str,
                          budget: int):
    auto_t, auto_p = PathAutomaton(text), PathAutomaton(pattern)
    if auto_t.num_states * auto_p.num_states > budget:
        raise CapExceeded("uncompacted product exceeds budget")
    steps_t, steps_p = auto_t.letter_steps(), auto_p.letter_steps()
    comp = _pattern_completion_costs(pattern, metric, auto_p)
    bound = text.size + pattern.size + 1
    sources = {(x, 1) for x in auto_t.all_states()}
    moves = _product_moves(steps_t, steps_p, metric)
    dist, parent = _dial_run(sources, moves, bound)

    accept_col = auto_p.n + 1
    best_val = INF
    best_node = None
    for (x, y), d in dist.items():
        if y == accept_col and d < best_val:
            best_val, best_node = d, (x, y)
    if best_node is None:
        result = DistanceResult(False)
    else:
        s_t, s_p = _backtrack(parent, sources, best_node)
        result = DistanceResult(True, int(best_val), (s_p, s_t))

    per_seg: dict[int, float] = {}

    def charge(state_t, total):
        seg = _segment_after(auto_t, state_t)
        if seg is not None and seg <= auto_t.n and total < per_seg.get(seg, INF):
            per_seg[seg] = total

    for node, d in dist.items():
        x, y = node
        if node in sources and comp[y] < INF:
            charge(x, d + comp[y])
        for (nxt, w, c1, _c2) in moves(node):
            if c1 is None:
                continue
            x2, y2 = nxt
            if comp[y2] < INF:
                charge(x2, d + w + comp[y2])

    threshold = best_val if best_val is not INF else None
    ends = {s for s, v in per_seg.items() if threshold is not None
            and v <= threshold}
    return result, ends


def _approx_end_bounded(pattern: EDString, text: EDString, metric: str,
                        k: int):
    if k < 1:
        raise ValueError("threshold must be at least 1")
    graph = _WeightedGraph(text, pattern, metric, k)
    auto_t, auto_p = graph.auto1, graph.auto2
    comp = _pattern_completion_costs(pattern, metric, auto_p)
    sources = {(x, 1) for x in auto_t.all_states()}
    dist, parent = _dial_run(sources, graph.moves, k)

    accept_col = auto_p.n + 1
    best_val = INF
    best_node = None
    for (x, y), d in dist.items():
        if auto_p.is_explicit(y) and y == accept_col and d < best_val:
            best_val, best_node = d, (x, y)
    if best_node is None:
        result = DistanceResult(False)
    else:
        s_t, s_p = _backtrack(parent, sources, best_node)
        result = DistanceResult(True, int(best_val), (s_p, s_t))

    per_seg: dict[int, float] = {}

    def charge(state_t, total):
        if total > k:
            return
        seg = _segment_after(auto_t, state_t)
        if seg is not None and seg <= auto_t.n and total < per_seg.get(seg, INF):
            per_seg[seg] = total

    for node, d in dist.items():
        if node in sources and comp[node[1]] < INF:
            charge(node[0], d + comp[node[1]])
        for dst, (_w, _c1, _c2, wc) in graph.out.get(node, {}).items():
            if wc is None:
                continue
            if comp[dst[1]] < INF:
                charge(dst[0], d + wc + comp[dst[1]])

    ends = set(per_seg)
    return result, ends
