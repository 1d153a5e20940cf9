"""Independent brute-force oracles.

Everything here works straight off the problem statements: enumerate the
languages or alignments and apply classic per-pair routines.  None of it
touches the intersection-graph machinery, so the oracles stay meaningful as
references for it.  Oracles refuse oversized instances by raising
:class:`CapExceeded`; callers treat that as a skip, never as a pass.
"""

from __future__ import annotations

from collections import Counter
from itertools import product

from .core import (CapExceeded, EDString, enumerate_language, iter_alignments,
                   language_size_estimate)

DEFAULT_CAP = 20_000
ALIGNMENT_CAP = 100_000
PAIR_CAP = 50_000


def brute_intersect(t1: EDString, t2: EDString,
                    cap: int = DEFAULT_CAP) -> set[str]:
    """The intersection of the two languages, fully enumerated."""
    return enumerate_language(t1, cap) & enumerate_language(t2, cap)


def brute_pairs_count(t1: EDString, t2: EDString,
                      cap: int = ALIGNMENT_CAP) -> int:
    """Alignment pairs with equal concatenations, multiplicities included."""
    if language_size_estimate(t1) > cap or language_size_estimate(t2) > cap:
        raise CapExceeded("alignment product exceeds cap")
    c1 = Counter(s for s, _ in iter_alignments(t1, cap))
    c2 = Counter(s for s, _ in iter_alignments(t2, cap))
    return sum(count * c2[s] for s, count in c1.items() if s in c2)


def _substring_set(strings) -> set[str]:
    subs: set[str] = set()
    for s in strings:
        for a in range(len(s)):
            for b in range(a + 1, len(s) + 1):
                subs.add(s[a:b])
    subs.add("")
    return subs


def brute_ms(t1: EDString, t2: EDString, cap: int = 4_000) -> list[int]:
    """Matching statistics by enumerating suffix languages and substrings."""
    lang2 = enumerate_language(t2, cap)
    subs2 = _substring_set(lang2)
    longest2 = max((len(x) for x in subs2), default=0)
    out = []
    for i in range(t1.n):
        tail = EDString(t1.segments[i:])
        best = 0
        for s in enumerate_language(tail, cap):
            length = min(len(s), longest2)
            # prefix membership is downward closed, so scan down from the cap
            while length > best and s[:length] not in subs2:
                length -= 1
            if length > best:
                best = length
        out.append(best)
    return out


def brute_lcsubstring(t1: EDString, t2: EDString,
                      cap: int = 4_000) -> tuple[int, str]:
    common = (_substring_set(enumerate_language(t1, cap))
              & _substring_set(enumerate_language(t2, cap)))
    best = max(common, key=len)
    return len(best), best


def lcs_length(a: str, b: str) -> int:
    """Classic longest-common-subsequence length, two rows."""
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for j, cb in enumerate(b, start=1):
            cur.append(prev[j - 1] + 1 if ca == cb
                       else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def brute_lcsubsequence(t1: EDString, t2: EDString, cap: int = 2_000) -> int:
    l1 = enumerate_language(t1, cap)
    l2 = enumerate_language(t2, cap)
    if len(l1) * len(l2) > PAIR_CAP:
        raise CapExceeded("pairwise product exceeds cap")
    return max(lcs_length(a, b) for a in l1 for b in l2)


def edit_distance(a: str, b: str) -> int:
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i]
        for j, cb in enumerate(b, start=1):
            cur.append(min(prev[j] + 1, cur[j - 1] + 1,
                           prev[j - 1] + (ca != cb)))
        prev = cur
    return prev[-1]


def hamming_distance(a: str, b: str) -> int | None:
    if len(a) != len(b):
        return None
    return sum(x != y for x, y in zip(a, b))


def brute_min_distance(t1: EDString, t2: EDString, metric: str,
                       cap: int = 2_000):
    """(distance, pair) minimizing the metric over the language product,
    or None when no finite pair exists (Hamming with disjoint lengths)."""
    l1 = sorted(enumerate_language(t1, cap))
    l2 = sorted(enumerate_language(t2, cap))
    if len(l1) * len(l2) > PAIR_CAP:
        raise CapExceeded("pairwise product exceeds cap")
    best = None
    for a in l1:
        for b in l2:
            d = (hamming_distance(a, b) if metric == "hamming"
                 else edit_distance(a, b))
            if d is not None and (best is None or d < best[0]):
                best = (d, (a, b))
    return best


def _segment_of_position(cum: list[int], pos: int) -> int:
    """1-based segment whose production holds 1-based letter position pos."""
    lo = 0
    for seg, end in enumerate(cum, start=1):
        if lo < pos <= end:
            return seg
        lo = end
    raise ValueError("position outside the string")


def brute_edsm(pattern: EDString, text: EDString,
               cap: int = DEFAULT_CAP) -> tuple[bool, set[int], set[int]]:
    """(found, end segments, start segments) for exact doubly matching.

    An occurrence is charged to the segments holding its last and first
    letters under the alignment; when the whole pattern can be empty it is
    charged everywhere.
    """
    pats = enumerate_language(pattern, cap)
    found = False
    ends: set[int] = set()
    starts: set[int] = set()
    if "" in pats:
        found = True
        ends.update(range(1, text.n + 1))
        starts.update(range(1, text.n + 1))
    nonempty = [p for p in pats if p]
    for t, cum in iter_alignments(text, cap):
        for p in nonempty:
            at = t.find(p)
            while at != -1:
                found = True
                starts.add(_segment_of_position(cum, at + 1))
                ends.add(_segment_of_position(cum, at + len(p)))
                at = t.find(p, at + 1)
    return found, ends, starts


def _window_end_mins(p: str, t: str) -> list[int]:
    """out[b-1]: minimum edit distance of p to a window of t ending at
    boundary b, minimized over all window starts (free-start DP)."""
    m = len(p)
    prev = list(range(m + 1))
    out = []
    for tc in t:
        cur = [0]
        for i in range(1, m + 1):
            cur.append(min(prev[i] + 1, cur[i - 1] + 1,
                           prev[i - 1] + (p[i - 1] != tc)))
        out.append(cur[m])
        prev = cur
    return out


def brute_approx_edsm(pattern: EDString, text: EDString, metric: str,
                      cap: int = 2_000):
    """(min distance or None, per-segment best distance dicts for ends and
    starts).  Empty windows are charged to the alignment states they sit at."""
    if (language_size_estimate(pattern) * language_size_estimate(text)
            > PAIR_CAP):
        raise CapExceeded("pattern/text product exceeds cap")
    pats = sorted(enumerate_language(pattern, cap))
    best = None
    end_best: dict[int, int] = {}
    start_best: dict[int, int] = {}
    n = text.n

    def charge(d: int, table: dict[int, int], seg: int | None):
        if seg is not None and (seg not in table or d < table[seg]):
            table[seg] = d

    def charge_boundary(d: int, cum: list[int], beta: int):
        # realized states of boundary beta: right edges and strict interiors
        for seg, end in enumerate(cum, start=1):
            lo = cum[seg - 2] if seg >= 2 else 0
            if (end == beta and seg <= n) or lo < beta < end:
                charge(d, end_best, seg)
                charge(d, start_best, seg)

    for t, cum in iter_alignments(text, cap):
        for p in pats:
            if metric == "hamming":
                empty_d = 0 if not p else None
                if len(p) <= len(t):
                    for a in range(len(t) - len(p) + 1):
                        d = sum(x != y for x, y in zip(p, t[a:a + len(p)]))
                        if best is None or d < best:
                            best = d
                        if p:
                            charge(d, end_best,
                                   _segment_of_position(cum, a + len(p)))
                            charge(d, start_best,
                                   _segment_of_position(cum, a + 1))
            elif not p:
                empty_d = 0
                # nonempty windows cost their own length; singles are best
                for pos in range(1, len(t) + 1):
                    if best is None or 1 < best:
                        best = min(best, 1) if best is not None else 1
                    seg = _segment_of_position(cum, pos)
                    charge(1, end_best, seg)
                    charge(1, start_best, seg)
            else:
                empty_d = len(p)
                # free-start DP minimizes over window starts per end; the
                # empty window it includes never undercuts a single-letter
                # window for nonempty p, so the combined minimum is safe
                ends = _window_end_mins(p, t)
                starts = _window_end_mins(p[::-1], t[::-1])
                for b, d in enumerate(ends, start=1):
                    if best is None or d < best:
                        best = d
                    charge(d, end_best, _segment_of_position(cum, b))
                for b_rev, d in enumerate(starts, start=1):
                    charge(d, start_best,
                           _segment_of_position(cum, len(t) - b_rev + 1))
            if empty_d is not None:
                if best is None or empty_d < best:
                    best = empty_d
                for beta in range(len(t) + 1):
                    charge_boundary(empty_d, cum, beta)
    return best, end_best, start_best


def brute_acronym_decide(dictionary, words, minlens=None) -> bool:
    return bool(brute_acronym_report(dictionary, words, minlens))


def brute_acronym_report(dictionary, words, minlens=None) -> set[str]:
    """Per-dictionary-string decomposition check (offset-set DP)."""
    minlens = minlens or [0] * len(words)
    winners = set()
    for target in dictionary:
        offsets = {0}
        for word, xmin in zip(words, minlens):
            nxt = set()
            for q in offsets:
                limit = min(len(word), len(target) - q)
                ell = 0
                while ell < limit and word[ell] == target[q + ell]:
                    ell += 1
                for take in range(xmin, ell + 1):
                    nxt.add(q + take)
            offsets = nxt
            if not offsets:
                break
        if len(target) in offsets:
            winners.add(target)
    return winners


def brute_acronym_enumerate(dictionary, words, minlens=None,
                            cap: int = 50_000) -> set[str]:
    """Full prefix-product enumeration (for validating the DP oracle)."""
    minlens = minlens or [0] * len(words)
    est = 1
    for w, x in zip(words, minlens):
        est *= len(w) - x + 1
    if est > cap:
        raise CapExceeded("prefix product exceeds cap")
    choices = [[w[:take] for take in range(x, len(w) + 1)]
               for w, x in zip(words, minlens)]
    acronyms = {"".join(parts) for parts in product(*choices)}
    return {d for d in dictionary if d in acronyms}


def brute_sumset(a, b) -> list[int]:
    return sorted({x + y for x in a for y in b})


def brute_unary_lengths(sets) -> list[int]:
    totals = {0}
    for s in sets:
        totals = {t + v for t in totals for v in s}
    return sorted(totals)


def brute_ov(vectors) -> bool:
    """Quadratic orthogonal-pair check."""
    vecs = list(vectors)
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if all(x * y == 0 for x, y in zip(vecs[i], vecs[j])):
                return True
    return False
