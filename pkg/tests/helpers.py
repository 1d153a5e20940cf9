"""Shared reference implementations used only by the tests."""

from edstrings.graph import EXACT, FULL, PS, PathAutomaton


def quadratic_cell_edges(t1, t2, i, j):
    """All edges of cell (i, j) by scanning every (variant, suffix) pair and
    classifying the longest common prefix, plus the cell's epsilon edges."""
    a1, a2 = PathAutomaton(t1), PathAutomaton(t2)
    n1, n2 = t1.n, t2.n
    out = []
    seg1 = t1.segments[i - 1] if i <= n1 else ()
    seg2 = t2.segments[j - 1] if j <= n2 else ()

    def lcp(a, b):
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    if i <= n1 and j <= n2:
        sources2 = [(j, v2, 0) for v2, q in enumerate(seg2) if q]
        sources2 += [(a2.state_at(j, v2, off), v2, off)
                     for v2, q in enumerate(seg2)
                     for off in range(1, len(q))]
        for k, v2, off2 in sources2:
            w = seg2[v2][off2:]
            for v1, p in enumerate(seg1):
                if not p:
                    continue
                ell = lcp(p, w)
                if ell == len(w) == len(p):
                    out.append(((i, k), (i + 1, j + 1), p, EXACT))
                elif ell == len(w) < len(p):
                    out.append(((i, k), (a1.state_at(i, v1, ell), j + 1),
                                w, PS))
                elif ell == len(p) < len(w):
                    out.append(((i, k), (i + 1, a2.state_at(j, v2, off2 + ell)),
                                p, FULL))
        for v1, p in enumerate(seg1):
            for off1 in range(1, len(p)):
                u = a1.state_at(i, v1, off1)
                w = p[off1:]
                for v2, q in enumerate(seg2):
                    if not q:
                        continue
                    ell = lcp(w, q)
                    if ell == len(w) == len(q):
                        out.append(((u, j), (i + 1, j + 1), w, EXACT))
                    elif ell == len(q) < len(w):
                        out.append(((u, j), (a1.state_at(i, v1, off1 + ell),
                                             j + 1), q, PS))
                    elif ell == len(w) < len(q):
                        out.append(((u, j), (i + 1, a2.state_at(j, v2, ell)),
                                    w, FULL))
    n_eps1 = sum(1 for s in seg1 if not s) if i <= n1 else 0
    n_eps2 = sum(1 for s in seg2 if not s) if j <= n2 else 0
    if i <= n1:
        for k in a2.states_in_segment(j):
            out.extend(((i, k), (i + 1, k), "", FULL) for _ in range(n_eps1))
    if j <= n2:
        for u in a1.states_in_segment(i):
            out.extend(((u, j), (u, j + 1), "", PS) for _ in range(n_eps2))
    out.extend(((i, j), (i + 1, j + 1), "", EXACT)
               for _ in range(n_eps1 * n_eps2))
    return sorted(out)


def quadratic_active_prefixes(p, w, strings):
    m = len(p)
    bits = [int(x) for x in w]
    out = [0] * m
    for q in range(1, m + 1):
        for qp in range(1, m + 1):
            if not bits[qp - 1]:
                continue
            for s in strings:
                if p[:qp - 1] + s == p[:q - 1]:
                    out[q - 1] = 1
    return out
