import random

from helpers import quadratic_active_prefixes, quadratic_cell_edges

from edstrings.core import parse_eds
from edstrings.generate import random_eds
from edstrings.graph import (EXACT, FULL, PARTIAL, PS, GridScan,
                             active_prefixes, build_augmented,
                             build_cell_edges, build_full, reachability)
from edstrings.lcpindex import build_arena, build_index
from edstrings.oracles import brute_intersect

T1 = parse_eds("{AC,A,TGCT}{,CA}")
T2 = parse_eds("{T,}{GCA,AC}")


def edge_view(arena, edges):
    return sorted((e.src, e.dst, arena.decode(e.pos, e.length), e.kind)
                  for e in edges)


def test_cell_edges_paper_trie_example():
    t1 = parse_eds("{abba,aaa,bb,a}")
    t2 = parse_eds("{ba,aaab,b}")
    arena = build_arena((t1, t2))
    edges = edge_view(arena, build_cell_edges(1, 1, arena))
    # the three narrated constructions, all from sources paired with the
    # first input's explicit state: the two b suffixes extend into bb, aaa
    # sits inside aaab, and a equals a whole suffix of ba
    ps_b = [e for e in edges
            if e[3] == PS and e[2] == "b" and e[0][0] == 1]
    assert len(ps_b) == 2
    assert all(e[1][1] == 2 for e in ps_b)
    assert any(e[3] == FULL and e[2] == "aaa" and e[0] == (1, 1)
               for e in edges)
    assert any(e[3] == EXACT and e[2] == "a" for e in edges)


def test_cell_edges_identical_singletons():
    t = parse_eds("{XY}")
    arena = build_arena((t, t))
    edges = build_cell_edges(1, 1, arena)
    assert len(edges) == 1
    assert edges[0].src == (1, 1) and edges[0].dst == (2, 2)
    assert edges[0].kind == EXACT


def test_cell_edges_against_quadratic_oracle():
    for seed in range(120):
        t1 = random_eds(seed * 2, n_range=(1, 3), seg_size_range=(1, 3),
                        len_range=(1, 4), alphabet=2, eps_prob=0.25)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 3), seg_size_range=(1, 3),
                        len_range=(1, 4), alphabet=2, eps_prob=0.25)
        arena = build_arena((t1, t2))
        idx = build_index(arena)
        for i in range(1, t1.n + 2):
            for j in range(1, t2.n + 2):
                got = edge_view(arena, build_cell_edges(i, j, arena, idx))
                assert got == quadratic_cell_edges(t1, t2, i, j)


def test_build_full_running_example():
    graph = build_full(T1, T2)
    reach = graph.reachable_from([graph.start])
    assert graph.accept in reach


def test_build_full_edge_bound():
    for seed in range(60):
        t1 = random_eds(seed * 2, eps_prob=0.25)
        t2 = random_eds(seed * 2 + 1, eps_prob=0.25)
        graph = build_full(t1, t2)
        count = sum(len(lst) for lst in graph.out.values())
        bound = 4 * (t1.size * t2.m + t2.size * t1.m)
        assert count <= bound


def test_full_reachability_matches_enumeration():
    for seed in range(200):
        t1 = random_eds(seed * 2, n_range=(1, 4), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.25)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 4), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.25)
        want = bool(brute_intersect(t1, t2))
        graph = build_full(t1, t2)
        assert (graph.accept in graph.reachable_from([graph.start])) == want
        assert reachability(t1, t2).accept == want


def test_topological_order_is_valid():
    for seed in range(40):
        t1 = random_eds(seed * 2, eps_prob=0.25)
        t2 = random_eds(seed * 2 + 1, eps_prob=0.25)
        graph = build_full(t1, t2)
        position = {node: r for r, node in enumerate(graph.topo_nodes())}
        for e in graph.edges:
            assert position[e.src] < position[e.dst]


def test_edge_replay_in_both_automata():
    for seed in range(60):
        t1 = random_eds(seed * 2 + 301, n_range=(1, 3),
                        seg_size_range=(1, 3), len_range=(1, 4), alphabet=2,
                        eps_prob=0.25)
        t2 = random_eds(seed * 2 + 302, n_range=(1, 3),
                        seg_size_range=(1, 3), len_range=(1, 4), alphabet=2,
                        eps_prob=0.25)
        graph = build_full(t1, t2)
        steps1 = graph.auto1.letter_steps()
        steps2 = graph.auto2.letter_steps()

        def walk(steps, state, label):
            states = {state}
            for ch in label:
                states = {s2 for s in states
                          for c, s2 in steps[s] if c == ch}
            return states

        rng = random.Random(seed)
        edges = list(graph.edges)
        for e in rng.sample(edges, min(30, len(edges))):
            label = graph.label(e)
            if e.length > 0:
                assert e.dst[0] in walk(steps1, e.src[0], label)
                assert e.dst[1] in walk(steps2, e.src[1], label)
            elif e.kind == FULL:
                assert e.src[1] == e.dst[1]
                assert (None, e.dst[0]) in steps1[e.src[0]]
            elif e.kind == PS:
                assert e.src[0] == e.dst[0]
                assert (None, e.dst[1]) in steps2[e.src[1]]
            else:
                assert (None, e.dst[0]) in steps1[e.src[0]]
                assert (None, e.dst[1]) in steps2[e.src[1]]


def test_augmented_running_example_has_one_partial():
    graph = build_augmented(T1, T2, "forward")
    partials = [e for e in graph.edges if e.kind == PARTIAL]
    assert len(partials) == 1
    (edge,) = partials
    assert not graph.auto1.is_explicit(edge.dst[0])
    assert not graph.auto2.is_explicit(edge.dst[1])
    assert graph.label(edge) == "GC"


def test_augmented_disjoint_alphabets_has_no_partials():
    g = build_augmented(parse_eds("{ab,ba}"), parse_eds("{cd,dc}"), "both")
    assert not any(e.kind == PARTIAL for e in g.edges)


def test_forward_partials_match_pairwise_lcp():
    for seed in range(40):
        t1 = random_eds(seed * 2, n_range=(1, 2), seg_size_range=(1, 3),
                        len_range=(1, 4), alphabet=2)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 2), seg_size_range=(1, 3),
                        len_range=(1, 4), alphabet=2)
        graph = build_augmented(t1, t2, "forward")
        got = sorted((e.src, e.dst, graph.label(e))
                     for e in graph.edges if e.kind == PARTIAL)
        want = []
        a1, a2 = graph.auto1, graph.auto2
        for i in range(1, t1.n + 1):
            for j in range(1, t2.n + 1):
                for v1, p in enumerate(t1.segments[i - 1]):
                    for v2, q in enumerate(t2.segments[j - 1]):
                        for o1 in range(len(p)):
                            for o2 in range(len(q)):
                                if o1 and o2:
                                    continue
                                ell = 0
                                while (o1 + ell < len(p) and o2 + ell < len(q)
                                       and p[o1 + ell] == q[o2 + ell]):
                                    ell += 1
                                if 0 < ell < min(len(p) - o1, len(q) - o2):
                                    want.append(
                                        ((a1.state_at(i, v1, o1),
                                          a2.state_at(j, v2, o2)),
                                         (a1.state_at(i, v1, o1 + ell),
                                          a2.state_at(j, v2, o2 + ell)),
                                         p[o1:o1 + ell]))
        assert got == sorted(want)


def test_active_prefixes_examples():
    assert active_prefixes("aab", "100", {"a"}) == [0, 1, 0]
    assert active_prefixes("ab", "10", {""}) == [1, 0]
    assert active_prefixes("ab", "01", {""}) == [0, 1]


def test_active_prefixes_against_quadratic():
    rng = random.Random(99)
    for _ in range(300):
        m = rng.randint(1, 8)
        p = "".join(rng.choice("ab") for _ in range(m))
        w = [rng.randint(0, 1) for _ in range(m)]
        strings = {"".join(rng.choice("ab")
                           for _ in range(rng.randint(0, 3)))
                   for _ in range(rng.randint(1, 4))}
        assert active_prefixes(p, w, strings) == \
            quadratic_active_prefixes(p, w, strings)


def test_reach_steps_match_full_graph_edges():
    for seed in range(80):
        t1 = random_eds(seed * 2, n_range=(1, 3), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.25)
        t2 = random_eds(seed * 2 + 1, n_range=(1, 3), seg_size_range=(1, 3),
                        len_range=(1, 3), alphabet=2, eps_prob=0.25)
        graph = build_full(t1, t2)
        scan = GridScan(t1, t2)
        rng = random.Random(seed)
        for i in range(1, t1.n + 1):
            for j in range(1, t2.n + 1):
                family = [j] + graph.auto2.implicit_in_segment(j)
                x = {k for k in family if rng.random() < 0.6}
                # expected, straight from the materialized edges
                want_ps, want_ext, want_diag = set(), set(), False
                for k in x:
                    for e in graph.out.get((i, k), ()):
                        if e.dst == (i + 1, j + 1):
                            want_diag = True
                        elif e.dst[1] == j + 1:
                            want_ps.add(e.dst[0])
                        elif e.dst[0] == i + 1:
                            want_ext.add(e.dst[1])
                got_ps, got_diag = scan.prefix_suffix_step(i, j, x)
                got_ext = scan.extension_step(i, j, x)
                assert got_ps == want_ps, (seed, i, j, x)
                assert got_diag == want_diag, (seed, i, j, x)
                assert got_ext == want_ext, (seed, i, j, x)


def test_reach_step_empty_set():
    scan = GridScan(T1, T2)
    assert scan.prefix_suffix_step(1, 1, set()) == (set(), False)
    assert scan.extension_step(1, 1, set()) == set()


def test_streamed_cells_match_full_reachability():
    for seed in range(100):
        t1 = random_eds(seed * 2 + 61, n_range=(1, 3),
                        seg_size_range=(1, 3), len_range=(1, 3), alphabet=2,
                        eps_prob=0.25)
        t2 = random_eds(seed * 2 + 62, n_range=(1, 3),
                        seg_size_range=(1, 3), len_range=(1, 3), alphabet=2,
                        eps_prob=0.25)
        graph = build_full(t1, t2)
        reach = graph.reachable_from([graph.start])
        want_cells = {}
        for node in reach:
            want_cells.setdefault(graph.cell_of(node), set()).add(node)
        cells = {}
        result = reachability(t1, t2,
                              on_cell=lambda i, j, nodes:
                              cells.__setitem__((i, j), set(nodes)))
        assert result.accept == (graph.accept in reach)
        for cell in set(want_cells) | set(k for k, v in cells.items() if v):
            assert cells.get(cell, set()) == want_cells.get(cell, set()), \
                (seed, cell)


def test_graph_dump_lists_edges():
    graph = build_full(parse_eds("{A}"), parse_eds("{A}"))
    dump = graph.dump()
    assert "1 1 -> 2 2 A exact" in dump
