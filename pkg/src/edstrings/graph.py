"""Grid-structured intersection graph of two ED strings.

Each ED string is viewed as a compacted automaton: explicit states 1..n+1,
one string-labelled transition per variant, and implicit states (numbered
from n+2) subdividing every variant at its interior positions.  The
intersection graph pairs states of the two automata, keeping only pairs with
at least one explicit member, and connects them with edges classified as

  * ``ps``    -- a whole remaining suffix on the second side equals a proper
                 prefix on the first side, so the second automaton advances a
                 segment (a length-0 label is a horizontal epsilon edge);
  * ``full``  -- a whole string on the first side is consumed inside the
                 second side's current variant, so the first automaton
                 advances a segment (length 0 = vertical epsilon edge);
  * ``exact`` -- both sides finish together, jumping diagonally;
  * ``partial`` -- augmented graphs only: a maximal match that ends (or, for
                 backward augmentation, starts) at an implicit/implicit pair.

Cells are processed independently; the cell order (row, column) is a
topological order of the result.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, NamedTuple

from .core import EDString
from .lcpindex import LcpIndex, TextArena, build_arena, build_index

PS = "ps"
FULL = "full"
EXACT = "exact"
PARTIAL = "partial"


class Edge(NamedTuple):
    src: tuple[int, int]
    dst: tuple[int, int]
    pos: int      # arena position of the label
    length: int   # label length (the edge weight)
    kind: str


class PathAutomaton:
    """State numbering for one ED string inside the grid.

    Explicit states are 1..n+1.  Implicit states follow from n+2 onward, one
    block per variant in input order, entry ``off`` (1-based interior offset)
    at ``base + off - 1``.
    """

    def __init__(self, eds: EDString):
        self.eds = eds
        self.n = eds.n
        self._info: list[tuple[int, int, int]] = []  # per implicit: (seg, var, off)
        self.bases: list[list[int]] = []  # per segment, per variant: first id
        nid = self.n + 2
        for i, seg in enumerate(eds.segments, start=1):
            row = []
            for v, s in enumerate(seg):
                row.append(nid)
                for off in range(1, len(s)):
                    self._info.append((i, v, off))
                nid += max(0, len(s) - 1)
            self.bases.append(row)
        self.num_states = nid - 1
        self.first_implicit = self.n + 2

    def is_explicit(self, state: int) -> bool:
        return state <= self.n + 1

    def state_at(self, i: int, v: int, off: int) -> int:
        """State after reading ``off`` letters of variant v of segment i."""
        length = len(self.eds.segments[i - 1][v])
        if off == 0:
            return i
        if off == length:
            return i + 1
        return self.bases[i - 1][v] + off - 1

    def locate(self, state: int) -> tuple[int, int, int]:
        """(segment, variant, offset) of an implicit state."""
        return self._info[state - self.first_implicit]

    def segment_of(self, state: int) -> int:
        """Segment a state lies in: explicit i maps to i (row/column index),
        implicit states map to their variant's segment."""
        if self.is_explicit(state):
            return state
        return self._info[state - self.first_implicit][0]

    def suffix_of(self, state: int) -> str:
        """Remaining letters of the variant an implicit state sits on."""
        i, v, off = self.locate(state)
        return self.eds.segments[i - 1][v][off:]

    def implicit_in_segment(self, i: int) -> list[int]:
        out = []
        for v, s in enumerate(self.eds.segments[i - 1]):
            base = self.bases[i - 1][v]
            out.extend(range(base, base + max(0, len(s) - 1)))
        return out

    def states_in_segment(self, i: int) -> list[int]:
        """Explicit state i plus the implicit states of segment i (for
        i == n+1 just the accepting state)."""
        if i == self.n + 1:
            return [i]
        return [i] + self.implicit_in_segment(i)

    def all_states(self) -> range:
        return range(1, self.num_states + 1)

    def letter_steps(self) -> dict[int, list[tuple[str | None, int]]]:
        """Uncompacted view: per state, (letter | None for an empty
        production, successor state) moves."""
        steps: dict[int, list[tuple[str | None, int]]] = {}
        for i in range(1, self.n + 1):
            moves: list[tuple[str | None, int]] = []
            for v, s in enumerate(self.eds.segments[i - 1]):
                if not s:
                    moves.append((None, i + 1))
                else:
                    moves.append((s[0], self.state_at(i, v, 1)))
            steps[i] = moves
            for v, s in enumerate(self.eds.segments[i - 1]):
                for off in range(1, len(s)):
                    steps[self.state_at(i, v, off)] = [
                        (s[off], self.state_at(i, v, off + 1))]
        steps[self.n + 1] = []
        return steps

    def topo_states(self) -> list[int]:
        """All states ordered so every move goes forward."""
        def key(state):
            if self.is_explicit(state):
                return (state, 0)
            seg, _v, off = self.locate(state)
            return (seg, off)
        return sorted(self.all_states(), key=key)


class IntersectionGraph:
    """Materialized intersection graph (full or augmented)."""

    def __init__(self, t1: EDString, t2: EDString, arena: TextArena,
                 idx: LcpIndex | None, auto1: PathAutomaton,
                 auto2: PathAutomaton, edges: list[Edge],
                 augmented: str | None = None):
        self.t1, self.t2 = t1, t2
        self.arena = arena
        self.idx = idx
        self.auto1, self.auto2 = auto1, auto2
        self.augmented = augmented
        self.start = (1, 1)
        self.accept = (auto1.n + 1, auto2.n + 1)
        self.out: dict[tuple[int, int], list[Edge]] = {}
        setdefault = self.out.setdefault
        for e in edges:
            setdefault(e[0], []).append(e)

    @cached_property
    def nodes(self) -> set[tuple[int, int]]:
        nodes = {self.start, self.accept}
        for src, lst in self.out.items():
            nodes.add(src)
            for e in lst:
                nodes.add(e.dst)
        return nodes

    @property
    def edges(self) -> Iterable[Edge]:
        for lst in self.out.values():
            yield from lst

    def label(self, e: Edge) -> str:
        return self.arena.decode(e.pos, e.length)

    def cell_of(self, node: tuple[int, int]) -> tuple[int, int]:
        a, b = node
        return self.auto1.segment_of(a), self.auto2.segment_of(b)

    def sort_key(self, node: tuple[int, int]):
        a, b = node
        ka = (a, 0) if self.auto1.is_explicit(a) else (
            self.auto1.segment_of(a), self.auto1.locate(a)[2])
        kb = (b, 0) if self.auto2.is_explicit(b) else (
            self.auto2.segment_of(b), self.auto2.locate(b)[2])
        return ka, kb

    def topo_nodes(self) -> list[tuple[int, int]]:
        """Nodes in an order compatible with every edge direction."""
        return sorted(self.nodes, key=self.sort_key)

    def reachable_from(self, seeds: Iterable[tuple[int, int]],
                       skip_source=None) -> set[tuple[int, int]]:
        """Forward closure over edges; ``skip_source(node)`` suppresses all
        out-edges of matching nodes."""
        seen = set()
        stack = [s for s in seeds if s in self.nodes]
        while stack:
            node = stack.pop()
            if node in seen:
                continue
            seen.add(node)
            if skip_source is not None and skip_source(node):
                continue
            for e in self.out.get(node, ()):
                if e.dst not in seen:
                    stack.append(e.dst)
        return seen

    def dump(self) -> str:
        """Debug listing, one edge per line (format not stable)."""
        lines = []
        for node in self.topo_nodes():
            for e in self.out.get(node, ()):
                lines.append(
                    f"{e.src[0]} {e.src[1]} -> {e.dst[0]} {e.dst[1]} "
                    f"{self.label(e) or 'eps'} {e.kind}")
        return "\n".join(lines)


class _Builder:
    """Shared tables for cell-by-cell edge construction.

    Per segment of the second input: every variant suffix, pre-sliced, with
    the state it starts at.  Per segment of the first input: every proper
    variant suffix and every variant prefix, pre-sliced.  All cell batches
    walk these tables so string hashes are computed once.
    """

    def __init__(self, t1: EDString, t2: EDString,
                 arena: TextArena | None = None, idx: LcpIndex | None = None):
        self.t1, self.t2 = t1, t2
        self.arena = arena if arena is not None else build_arena((t1, t2))
        self.idx = idx
        self.auto1 = PathAutomaton(t1)
        self.auto2 = PathAutomaton(t2)

        a1, a2 = self.auto1, self.auto2
        spans = self.arena.spans
        self.pos1 = [[spans[(0, i, v)][0] for v in range(len(seg))]
                     for i, seg in enumerate(t1.segments)]
        self.pos2 = [[spans[(1, i, v)][0] for v in range(len(seg))]
                     for i, seg in enumerate(t2.segments)]

        # T2 side, per segment (1-based index i -> list index i-1):
        #   suffixes[j]: (string, state, var, off) for off in [0, len)
        #   sufmap[j]:   string -> those entries
        #   eps[j]:      number of empty variants
        self.suf2: list[list[tuple[str, int, int, int]]] = []
        self.eps2: list[int] = []
        for j, seg in enumerate(t2.segments, start=1):
            entries = []
            eps = 0
            for v, s in enumerate(seg):
                if not s:
                    eps += 1
                    continue
                for off in range(len(s)):
                    entries.append((s[off:], a2.state_at(j, v, off), v, off))
            self.suf2.append(entries)
            self.eps2.append(eps)

        # T1 side, per segment:
        #   prefmap[i]: prefix string -> (list of (implicit target, var),
        #                                 list of vars matched exactly)
        #   sufmap1[i]: proper suffix -> list of (state, var, off)
        #   eps1[i]
        self.prefmap1: list[dict[str, tuple[list, list]]] = []
        self.sufmap1: list[dict[str, list[tuple[int, int, int]]]] = []
        self.eps1: list[int] = []
        for i, seg in enumerate(t1.segments, start=1):
            pmap: dict[str, tuple[list, list]] = {"": ([], [])}
            smap: dict[str, list[tuple[int, int, int]]] = {}
            eps = 0
            for v, s in enumerate(seg):
                if not s:
                    eps += 1
                    continue
                for length in range(1, len(s)):
                    pmap.setdefault(s[:length], ([], []))[0].append(
                        (a1.state_at(i, v, length), v))
                pmap.setdefault(s, ([], []))[1].append(v)
                for off in range(1, len(s)):
                    smap.setdefault(s[off:], []).append(
                        (a1.state_at(i, v, off), v, off))
            self.prefmap1.append(pmap)
            self.sufmap1.append(smap)
            self.eps1.append(eps)

    def _require_idx(self) -> LcpIndex:
        if self.idx is None:
            self.idx = build_index(self.arena)
        return self.idx

    # -- full-graph cell batch ------------------------------------------

    def cell_edges(self, i: int, j: int) -> list[Edge]:
        """All edges owned by cell (i, j), including its epsilon edges."""
        t1, t2 = self.t1, self.t2
        a1, a2 = self.auto1, self.auto2
        n1, n2 = a1.n, a2.n
        edges: list[Edge] = []

        seg1 = t1.segments[i - 1] if i <= n1 else ()
        seg2 = t2.segments[j - 1] if j <= n2 else ()

        if i <= n1 and j <= n2:
            pos1, pos2 = self.pos1[i - 1], self.pos2[j - 1]
            prefmap = self.prefmap1[i - 1]
            bases1, bases2 = a1.bases[i - 1], a2.bases[j - 1]
            append = edges.append
            prefget = prefmap.get

            # Sources (i, k): T2 suffixes looked up among T1 prefixes.
            for w, k, v2, off2 in self.suf2[j - 1]:
                hit = prefget(w)
                if hit is None:
                    continue
                partials, exacts = hit
                wpos = pos2[v2] + off2
                wlen = len(w)
                src = (i, k)
                for target, _v1 in partials:
                    append(Edge(src, (target, j + 1), wpos, wlen, PS))
                for _v1 in exacts:
                    append(Edge(src, (i + 1, j + 1), wpos, wlen, EXACT))

            # Sources (i, *): occurrences of a T1 variant inside a T2 variant
            # (suffix occurrences already emitted as exact above).
            for v1, p in enumerate(seg1):
                if not p:
                    continue
                plen = len(p)
                ppos = pos1[v1]
                for v2, q in enumerate(seg2):
                    if len(q) <= plen or p[0] not in q:
                        continue
                    qlast = len(q)
                    base = bases2[v2] - 1
                    find = q.find
                    start = find(p)
                    while start != -1:
                        end = start + plen
                        if end < qlast:
                            src = (i, j) if start == 0 else (i, base + start)
                            append(Edge(src, (i + 1, base + end),
                                        ppos, plen, FULL))
                        start = find(p, start + 1)

            # Sources (u, j) with u implicit: T2 prefixes among T1 proper
            # suffixes (full consumption of the T1 remainder) ...
            sufmap = self.sufmap1[i - 1]
            if sufmap:
                sufget = sufmap.get
                for v2, q in enumerate(seg2):
                    qpos = pos2[v2]
                    qlen = len(q)
                    base = bases2[v2] - 1
                    for length in range(1, qlen + 1):
                        hits = sufget(q[:length])
                        if not hits:
                            continue
                        if length < qlen:
                            dst = (i + 1, base + length)
                        else:
                            dst = (i + 1, j + 1)
                        kind = FULL if length < qlen else EXACT
                        for u, _v1, _off in hits:
                            append(Edge((u, j), dst, qpos, length, kind))

            # ... and occurrences of a whole T2 variant strictly inside a T1
            # variant (the T1 side stays within its segment).
            for v2, q in enumerate(seg2):
                if not q:
                    continue
                qlen = len(q)
                qpos = pos2[v2]
                for v1, p in enumerate(seg1):
                    if len(p) <= qlen or q[0] not in p:
                        continue
                    plast = len(p)
                    base = bases1[v1] - 1
                    find = p.find
                    start = find(q, 1)
                    while start != -1:
                        end = start + qlen
                        if end < plast:
                            append(Edge((base + start, j), (base + end, j + 1),
                                        qpos, qlen, PS))
                        start = find(q, start + 1)

        # Epsilon edges.  Vertical: one per empty variant of T1[i], from every
        # pairing with a state of T2's segment j.  Horizontal: symmetric.
        # Diagonal: one per pair of empty variants.
        if i <= n1 and self.eps1[i - 1]:
            for k in a2.states_in_segment(j):
                for _ in range(self.eps1[i - 1]):
                    edges.append(Edge((i, k), (i + 1, k), 0, 0, FULL))
        if j <= n2 and self.eps2[j - 1]:
            for u in a1.states_in_segment(i):
                for _ in range(self.eps2[j - 1]):
                    edges.append(Edge((u, j), (u, j + 1), 0, 0, PS))
        if i <= n1 and j <= n2:
            for _ in range(self.eps1[i - 1] * self.eps2[j - 1]):
                edges.append(Edge((i, j), (i + 1, j + 1), 0, 0, EXACT))

        return edges

    # -- augmented (partial) edges --------------------------------------

    def partial_edges(self, i: int, j: int, backward: bool) -> list[Edge]:
        """Maximal partial edges of cell (i, j).

        Forward: source has an explicit member, target is implicit/implicit,
        label is the (nonzero) common prefix shorter than both remainders.
        Backward: source is implicit/implicit with mismatching previous
        letters, and one remainder is fully consumed.
        """
        t1, t2 = self.t1, self.t2
        a1, a2 = self.auto1, self.auto2
        if i > a1.n or j > a2.n:
            return []
        idx = self._require_idx()
        seg1, seg2 = t1.segments[i - 1], t2.segments[j - 1]
        pos1, pos2 = self.pos1[i - 1], self.pos2[j - 1]
        edges: list[Edge] = []
        for v1, p in enumerate(seg1):
            for v2, q in enumerate(seg2):
                if not p or not q:
                    continue
                for off1 in range(len(p)):
                    for off2 in range(len(q)):
                        if off1 and off2:
                            if backward and p[off1 - 1] != q[off2 - 1]:
                                pass  # backward-maximal candidate
                            else:
                                continue
                        elif backward:
                            continue
                        rem1, rem2 = len(p) - off1, len(q) - off2
                        ell = idx.lcp(pos1[v1] + off1, pos2[v2] + off2)
                        src = (a1.state_at(i, v1, off1), a2.state_at(j, v2, off2))
                        if backward:
                            if ell < min(rem1, rem2) or min(rem1, rem2) < 1:
                                continue
                            ell = min(rem1, rem2)
                            if rem1 == rem2:
                                dst = (i + 1, j + 1)
                            elif ell == rem1:
                                dst = (i + 1, a2.state_at(j, v2, off2 + ell))
                            else:
                                dst = (a1.state_at(i, v1, off1 + ell), j + 1)
                            edges.append(
                                Edge(src, dst, pos1[v1] + off1, ell, PARTIAL))
                        else:
                            if 0 < ell < min(rem1, rem2):
                                dst = (a1.state_at(i, v1, off1 + ell),
                                       a2.state_at(j, v2, off2 + ell))
                                edges.append(
                                    Edge(src, dst, pos1[v1] + off1, ell, PARTIAL))
        return edges


def build_cell_edges(i: int, j: int, arena: TextArena,
                     idx: LcpIndex | None = None) -> list[Edge]:
    """Edges out of the node families of cell (i, j) of the arena's inputs."""
    if len(arena.inputs) != 2:
        raise ValueError("cell edges need an arena over two ED strings")
    builder = _Builder(arena.inputs[0], arena.inputs[1], arena, idx)
    return builder.cell_edges(i, j)


def build_full(t1: EDString, t2: EDString) -> IntersectionGraph:
    """Materialize the whole intersection graph."""
    b = _Builder(t1, t2)
    edges: list[Edge] = []
    for i in range(1, b.auto1.n + 2):
        for j in range(1, b.auto2.n + 2):
            edges.extend(b.cell_edges(i, j))
    return IntersectionGraph(t1, t2, b.arena, b.idx, b.auto1, b.auto2, edges)


def build_augmented(t1: EDString, t2: EDString,
                    direction: str = "forward") -> IntersectionGraph:
    """Full graph plus maximal partial edges (``forward`` or ``both``)."""
    if direction not in ("forward", "both"):
        raise ValueError("direction must be 'forward' or 'both'")
    b = _Builder(t1, t2)
    edges: list[Edge] = []
    for i in range(1, b.auto1.n + 2):
        for j in range(1, b.auto2.n + 2):
            edges.extend(b.cell_edges(i, j))
            edges.extend(b.partial_edges(i, j, backward=False))
            if direction == "both":
                edges.extend(b.partial_edges(i, j, backward=True))
    return IntersectionGraph(t1, t2, b.arena, b.idx, b.auto1, b.auto2, edges,
                             augmented=direction)


# -- active prefixes ------------------------------------------------------

def active_prefixes(p: str, w, strings) -> list[int]:
    """Dictionary-matching step seeded at set bits.

    ``w`` marks positions of ``p`` (1-based prefix boundaries, |w| == |p|).
    The result marks position q when some string of ``strings`` equals
    p[q'-1 : q-1] for a set bit q'.  An empty string in ``strings`` copies
    every set bit.
    """
    bits = [int(x) for x in w]
    if len(bits) != len(p):
        raise ValueError("bit vector length must equal |p|")
    m = len(p)
    out = [0] * m
    has_eps = any(s == "" for s in strings)
    nonempty = [s for s in set(strings) if s]
    if has_eps:
        out = bits[:]
    for q, bit in enumerate(bits, start=1):
        if not bit:
            continue
        for s in nonempty:
            q_end = q + len(s)
            if q_end <= m and p.startswith(s, q - 1):
                out[q_end - 1] = 1
    return out


# -- streamed reachability -------------------------------------------------

class ReachResult(NamedTuple):
    accept: bool
    peak_state_units: int
    cells_processed: int


class GridScan:
    """Streaming reachability over grid cells in row-major order.

    Holds one incoming column map for the current row, one for the next row,
    and the implicit-first-side carry of the current column, so retained
    state is proportional to the sizes of the two inputs.
    """

    def __init__(self, t1: EDString, t2: EDString):
        self.b = _Builder(t1, t2)
        self.auto1, self.auto2 = self.b.auto1, self.b.auto2
        # Per T2 segment: joined pattern "$S1$S2..." over nonempty variants,
        # plus boundary position -> state maps for the extension step.
        self._joined: list[tuple[str, list[int]]] = []
        sep = "\x00"
        for j, seg in enumerate(t2.segments, start=1):
            chunks: list[str] = []
            states: list[int] = []
            for v, s in enumerate(seg):
                if not s:
                    continue
                chunks.append(sep + s)
                states.append(0)  # placeholder for the separator position
                for off in range(len(s)):
                    states.append(self.auto2.state_at(j, v, off))
            self._joined.append(("".join(chunks), states))

    # The two per-cell step operations, exposed for direct testing.

    def prefix_suffix_step(self, i: int, j: int, x: Iterable[int]
                           ) -> tuple[set[int], bool]:
        """From sources (i, k), k in ``x``: first-side states reachable in
        column j+1, plus whether the diagonal (i+1, j+1) is reached."""
        prefmap = self.b.prefmap1[i - 1] if i <= self.auto1.n else {"": ([], [])}
        t2 = self.b.t2
        xset = set(x)
        targets: set[int] = set()
        diag = False
        for k in xset:
            if k == j:
                words = t2.segments[j - 1] if j <= self.auto2.n else ()
            else:
                words = (self.auto2.suffix_of(k),)
            for w in words:
                hit = prefmap.get(w)
                if hit is None:
                    continue
                partials, exacts = hit
                if w == "":
                    targets.add(i)  # horizontal move, first side unchanged
                for target, _v in partials:
                    targets.add(target)
                if exacts:
                    diag = True
        if i <= self.auto1.n and self.b.eps1[i - 1] and j <= self.auto2.n \
                and self.b.eps2[j - 1] and j in xset:
            diag = True  # two epsilon productions meet diagonally
        return targets, diag

    def extension_step(self, i: int, j: int, x: Iterable[int]) -> set[int]:
        """From sources (i, k), k in ``x``: second-side states of segment j
        whose pair with i+1 is reached by consuming one whole T1 variant."""
        if i > self.auto1.n or j > self.auto2.n:
            return set()
        joined, states = self._joined[j - 1]
        if not joined:
            # Only empty variants in T2[j]; vertical moves keep the state.
            return set(x) if self.b.eps1[i - 1] else set()
        xset = set(x)
        bits = [0] * len(joined)
        for q in range(len(joined)):
            st = states[q]
            if st and st in xset:
                bits[q] = 1
        out = active_prefixes(joined, bits,
                              list(self.b.t1.segments[i - 1]))
        result: set[int] = set()
        for q, bit in enumerate(out):
            if bit and states[q]:
                result.add(states[q])
        return result

    def _implicit_row_step(self, i: int, j: int, carry: Iterable[int]):
        """Sources (u, j) with u implicit in T1 segment i."""
        next_carry: set[int] = set()
        pending: set[int] = set()
        diag = False
        if j > self.auto2.n:
            return next_carry, pending, diag
        seg2 = self.b.t2.segments[j - 1]
        a1, a2 = self.auto1, self.auto2
        for u in carry:
            w = a1.suffix_of(u)
            ui, uv, uoff = a1.locate(u)
            for v2, q in enumerate(seg2):
                if not q:
                    next_carry.add(u)  # horizontal epsilon
                elif len(q) < len(w):
                    if w.startswith(q):
                        next_carry.add(a1.state_at(ui, uv, uoff + len(q)))
                elif len(q) > len(w):
                    if q.startswith(w):
                        pending.add(a2.state_at(j, v2, len(w)))
                elif q == w:
                    diag = True
        return next_carry, pending, diag

    def sweep(self, on_cell=None) -> ReachResult:
        """Mark everything reachable from (1, 1), cell by cell."""
        a1, a2 = self.auto1, self.auto2
        n1, n2 = a1.n, a2.n
        pending: dict[int, set[int]] = {1: {1}}
        peak = 0
        cells = 0
        accept = False
        for i in range(1, n1 + 2):
            carry: set[int] = set()
            next_pending: dict[int, set[int]] = {}
            for j in range(1, n2 + 2):
                x = pending.get(j, set())
                cells += 1
                if i == n1 + 1 and j == n2 + 1 and (n2 + 1) in x:
                    accept = True
                if on_cell is not None:
                    nodes = [(i, k) for k in sorted(x)]
                    nodes += [(u, j) for u in sorted(carry)]
                    on_cell(i, j, nodes)
                new_carry: set[int] = set()
                if x:
                    targets, diag = self.prefix_suffix_step(i, j, x)
                    for t in targets:
                        if t == i:
                            pending.setdefault(j + 1, set()).add(j + 1)
                        else:
                            new_carry.add(t)
                    if diag:
                        next_pending.setdefault(j + 1, set()).add(j + 1)
                    if j <= n2:
                        ext = self.extension_step(i, j, x)
                        if ext:
                            next_pending.setdefault(j, set()).update(ext)
                    elif i <= n1 and self.b.eps1[i - 1]:
                        next_pending.setdefault(j, set()).update(x)
                if carry:
                    c2, p2, diag2 = self._implicit_row_step(i, j, carry)
                    new_carry |= c2
                    if p2:
                        next_pending.setdefault(j, set()).update(p2)
                    if diag2:
                        next_pending.setdefault(j + 1, set()).add(j + 1)
                carry = new_carry
                units = (sum(len(s) for s in pending.values())
                         + sum(len(s) for s in next_pending.values())
                         + len(carry))
                if units > peak:
                    peak = units
            pending = next_pending
        return ReachResult(accept, peak, cells)


def reach_step_prefix_suffix(t1: EDString, t2: EDString, i: int, j: int,
                             x: Iterable[int]) -> tuple[set[int], bool]:
    return GridScan(t1, t2).prefix_suffix_step(i, j, x)


def reach_step_extension(t1: EDString, t2: EDString, i: int, j: int,
                         x: Iterable[int]) -> set[int]:
    return GridScan(t1, t2).extension_step(i, j, x)


def reachability(t1: EDString, t2: EDString, on_cell=None) -> ReachResult:
    return GridScan(t1, t2).sweep(on_cell)
