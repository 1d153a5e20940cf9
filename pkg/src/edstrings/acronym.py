"""Exact acronym generation.

An acronym of a word sequence takes one (possibly empty) prefix per word and
concatenates them.  Given a dictionary, decide whether any member is an
acronym, or report all members that are; each word may carry a minimum
prefix length.

The decision sweeps the words once, maintaining for every dictionary string
the set of offsets that the prefixes consumed so far can reach.  A word
extends an offset by any prefix length up to the longest common prefix of
the word and the dictionary remainder (at least the word's minimum), which
is an interval of new offsets, merged with a difference array.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class AcronymInstance:
    dictionary: tuple[str, ...]
    words: tuple[str, ...]
    minlens: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not all(self.dictionary):
            raise ValueError("dictionary strings must be nonempty")
        if not self.words:
            raise ValueError("need at least one word")
        mins = self.minlens or tuple([0] * len(self.words))
        object.__setattr__(self, "minlens", mins)
        if len(mins) != len(self.words):
            raise ValueError("one minimum length per word")
        for x, w in zip(mins, self.words):
            if not 0 <= x <= len(w):
                raise ValueError(f"minimum {x} exceeds word {w!r}")


def _lcp(a: str, b: str) -> int:
    n = min(len(a), len(b))
    k = 0
    while k < n and a[k] == b[k]:
        k += 1
    return k


def acronym_report(inst: AcronymInstance) -> set[str]:
    """Dictionary strings that are acronyms of the word sequence."""
    words, mins = inst.words, inst.minlens
    n = len(words)
    # A completion after word index i is valid only when every later word
    # may contribute the empty prefix: suffix_zero[t] says all minimums from
    # word index t onward are zero.
    suffix_zero = [True] * (n + 2)
    for t in range(n - 1, -1, -1):
        suffix_zero[t] = suffix_zero[t + 1] and mins[t] == 0

    winners: set[str] = set()
    at_start = True
    offsets: list[set[int]] = [set() for _ in inst.dictionary]
    for step, (word, xmin) in enumerate(zip(words, mins)):
        new_start = at_start and xmin == 0
        new_offsets: list[set[int]] = [set() for _ in inst.dictionary]
        for w, target in enumerate(inst.dictionary):
            diff = [0] * (len(target) + 2)
            sources = set(offsets[w])
            if at_start:
                sources.add(0)
            for q in sources:
                ell = _lcp(word, target[q:])
                lo, hi = q + xmin, q + ell
                if lo <= hi:
                    diff[lo] += 1
                    diff[hi + 1] -= 1
            run = 0
            reach = new_offsets[w]
            for q in range(len(target) + 1):
                run += diff[q]
                if run > 0 and q > 0:
                    if q == len(target):
                        if suffix_zero[step + 1]:
                            winners.add(target)
                    else:
                        reach.add(q)
        offsets = new_offsets
        at_start = new_start
    return winners


def acronym_decide(inst: AcronymInstance) -> bool:
    """Whether some dictionary string is an acronym of the word sequence."""
    return bool(acronym_report(inst))
