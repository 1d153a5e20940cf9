"""Suffix ordering with O(1) longest-common-prefix queries.

The arena concatenates every variant of one or two ED strings, each variant
followed by its own separator symbol.  Separators are pairwise distinct and
sort below every letter, so a comparison of two suffixes can never run past
the end of a variant.
"""

from __future__ import annotations

import numpy as np

from .core import EDString


class TextArena:
    """Integer text holding all variants plus per-variant separators.

    spans maps (input id, segment index, variant index) -- all 0-based except
    nothing; segment/variant indices are 0-based here -- to the half-open
    [start, end) range of that variant in ``text``.
    """

    def __init__(self, inputs):
        if isinstance(inputs, EDString):
            inputs = (inputs,)
        self.inputs: tuple[EDString, ...] = tuple(inputs)
        if not 1 <= len(self.inputs) <= 2:
            raise ValueError("arena takes one or two ED strings")

        letters = sorted({c for t in self.inputs for seg in t.segments
                          for s in seg for c in s})
        nsep = sum(t.m for t in self.inputs)
        self.letter_rank = {c: nsep + r for r, c in enumerate(letters)}
        self.rank_letter = {nsep + r: c for r, c in enumerate(letters)}
        self.num_separators = nsep

        text: list[int] = []
        spans: dict[tuple[int, int, int], tuple[int, int]] = {}
        source: list[int] = []
        sep = 0
        for sid, t in enumerate(self.inputs):
            for i, seg in enumerate(t.segments):
                for v, s in enumerate(seg):
                    start = len(text)
                    text.extend(self.letter_rank[c] for c in s)
                    spans[(sid, i, v)] = (start, len(text))
                    source.extend([sid] * len(s))
                    text.append(sep)
                    source.append(-1)
                    sep += 1
        self.text = np.asarray(text, dtype=np.int64)
        self.spans = spans
        self.source = np.asarray(source, dtype=np.int64)

    def __len__(self) -> int:
        return len(self.text)

    def decode(self, start: int, length: int) -> str:
        """Letters of text[start : start+length] (must not cross a separator)."""
        return "".join(self.rank_letter[int(r)] for r in
                       self.text[start:start + length])


def build_arena(inputs) -> TextArena:
    return TextArena(inputs)


def _suffix_array(text: np.ndarray) -> np.ndarray:
    """Prefix-doubling suffix sort over an integer array."""
    n = len(text)
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    rank = np.unique(text, return_inverse=True)[1].astype(np.int64)
    k = 1
    while k < n:
        second = np.full(n, -1, dtype=np.int64)
        second[:-k] = rank[k:]
        order = np.lexsort((second, rank))
        key = np.stack((rank[order], second[order]))
        new = np.empty(n, dtype=np.int64)
        new[order[0]] = 0
        new[order[1:]] = np.cumsum(
            (np.diff(key[0]) != 0) | (np.diff(key[1]) != 0))
        rank = new
        if rank[order[-1]] == n - 1:
            break
        k *= 2
    sa = np.empty(n, dtype=np.int64)
    sa[rank] = np.arange(n)
    return sa


class LcpIndex:
    """Suffix array + Kasai LCP array + sparse-table range minimum."""

    def __init__(self, arena: TextArena):
        if len(arena) == 0:
            raise ValueError("arena is empty")
        self.arena = arena
        text = arena.text
        n = len(text)
        self.sa = _suffix_array(text)
        self.rank = np.empty(n, dtype=np.int64)
        self.rank[self.sa] = np.arange(n)

        # Kasai's algorithm; separators are distinct so lcp of adjacent
        # suffixes already stops at variant ends.
        lcp = np.zeros(n, dtype=np.int64)
        k = 0
        for i in range(n):
            r = self.rank[i]
            if r == n - 1:
                k = 0
                continue
            j = self.sa[r + 1]
            while i + k < n and j + k < n and text[i + k] == text[j + k]:
                k += 1
            lcp[r] = k
            if k:
                k -= 1
        self.lcp_array = lcp  # lcp[r] = LCP(suffix sa[r], suffix sa[r+1])

        # Sparse table over lcp_array for O(1) range minimum.
        table = [lcp]
        span = 1
        while span * 2 <= n:
            prev = table[-1]
            table.append(np.minimum(prev[:-span], prev[span:]))
            span *= 2
        self._table = table

        # Distance to the owning separator, for lcp(i, i).
        remaining = np.zeros(n, dtype=np.int64)
        run = 0
        for i in range(n - 1, -1, -1):
            run = 0 if text[i] < arena.num_separators else run + 1
            remaining[i] = run
        self._remaining = remaining

    def _range_min(self, lo: int, hi: int) -> int:
        """Minimum of lcp_array[lo:hi] (hi exclusive, lo < hi)."""
        k = (hi - lo).bit_length() - 1
        row = self._table[k]
        return int(min(row[lo], row[hi - (1 << k)]))

    def lcp(self, i: int, j: int) -> int:
        """Longest common prefix of the suffixes at arena positions i and j,
        never extending past a separator."""
        n = len(self.arena)
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"positions {i}, {j} out of range")
        if i == j:
            return int(self._remaining[i])
        ri, rj = int(self.rank[i]), int(self.rank[j])
        if ri > rj:
            ri, rj = rj, ri
        return self._range_min(ri, rj)


def build_index(arena: TextArena) -> LcpIndex:
    return LcpIndex(arena)


def naive_lcp(arena: TextArena, i: int, j: int) -> int:
    """Reference scan used by the test suite."""
    text = arena.text
    nsep = arena.num_separators
    k = 0
    while (i + k < len(text) and j + k < len(text)
           and text[i + k] == text[j + k]
           and text[i + k] >= nsep):
        k += 1
    return k
