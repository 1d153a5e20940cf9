"""Elastic-degenerate string data model and the EDS text format.

An ED string is a sequence of segments; each segment is a nonempty list of
variant strings over [A-Za-z0-9].  Variants may be empty and duplicates are
kept (they matter when counting productions).  The language of an ED string
is every concatenation of one variant per segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product

LETTERS = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789"
)

DEFAULT_LANGUAGE_CAP = 20_000


class ParseError(ValueError):
    """Malformed EDS text; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CapExceeded(RuntimeError):
    """An enumeration or product would exceed its configured cap."""


@dataclass(frozen=True)
class EDString:
    """Immutable ED string.  ``segments`` is a tuple of variant tuples."""

    segments: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if not self.segments:
            raise ValueError("an ED string needs at least one segment")
        for seg in self.segments:
            if not seg:
                raise ValueError("every segment needs at least one variant")
            for s in seg:
                bad = set(s) - LETTERS
                if bad:
                    raise ValueError(f"letters outside [A-Za-z0-9]: {sorted(bad)!r}")

    @property
    def n(self) -> int:
        """Number of segments."""
        return len(self.segments)

    @property
    def m(self) -> int:
        """Total number of variant strings."""
        return sum(len(seg) for seg in self.segments)

    @property
    def n_eps(self) -> int:
        """Number of empty variants across all segments."""
        return sum(1 for seg in self.segments for s in seg if not s)

    @property
    def size(self) -> int:
        """Total size: every letter counts 1, every empty variant counts 1."""
        return self.n_eps + sum(len(s) for seg in self.segments for s in seg)

    @cached_property
    def alphabet(self) -> dict[str, int]:
        """Dense rank per distinct letter, consecutive from 0 in sorted order."""
        letters = sorted({c for seg in self.segments for s in seg for c in s})
        return {c: r for r, c in enumerate(letters)}

    def reverse(self) -> "EDString":
        """Mirror image: segment order and every variant string reversed."""
        return EDString(
            tuple(tuple(s[::-1] for s in seg) for seg in reversed(self.segments))
        )

    def __str__(self) -> str:
        return serialize_eds(self)


def stats(t: EDString) -> tuple[int, int, int, int]:
    """Return (n, m, N, N_eps) for an ED string."""
    return t.n, t.m, t.size, t.n_eps


def parse_eds(text: str | bytes) -> EDString:
    """Parse EDS text: bare letter runs are singleton segments, ``{a,b,}``
    groups list variants (an empty variant is the empty string)."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    segments: list[tuple[str, ...]] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c == "{":
            j = i + 1
            variants: list[str] = []
            cur: list[str] = []
            while True:
                if j >= n:
                    raise ParseError("unterminated group", i)
                c = text[j]
                if c == ",":
                    variants.append("".join(cur))
                    cur = []
                elif c == "}":
                    variants.append("".join(cur))
                    break
                elif c in LETTERS:
                    cur.append(c)
                else:
                    raise ParseError(f"unexpected character {c!r} in group", j)
                j += 1
            if variants == [""]:
                raise ParseError("empty segment {} is not allowed", i)
            segments.append(tuple(variants))
            i = j + 1
        elif c in LETTERS:
            j = i
            while j < n and text[j] in LETTERS:
                j += 1
            segments.append((text[i:j],))
            i = j
        else:
            raise ParseError(f"unexpected character {c!r}", i)
    if not segments:
        raise ParseError("empty input", 0)
    return EDString(tuple(segments))


def serialize_eds(t: EDString) -> str:
    """Canonical EDS text for ``t``; ``parse_eds`` of the output round-trips.

    A segment is written bare (no braces) only when it is a lone non-empty
    singleton whose neighbours are braced, so that maximal letter runs parse
    back into the same segment structure.
    """
    bare_ok = [len(seg) == 1 and seg[0] != "" for seg in t.segments]
    out: list[str] = []
    for i, seg in enumerate(t.segments):
        prev_bare = i > 0 and bare_ok[i - 1]
        next_bare = i + 1 < len(t.segments) and bare_ok[i + 1]
        if bare_ok[i] and not prev_bare and not next_bare:
            out.append(seg[0])
        else:
            if seg == ("",):
                raise ValueError(
                    "a segment whose only variant is the empty string has no "
                    "EDS text form"
                )
            out.append("{" + ",".join(seg) + "}")
    return "".join(out)


def language_size_estimate(t: EDString) -> int:
    """Upper bound on |L(t)|: the product of segment cardinalities."""
    est = 1
    for seg in t.segments:
        est *= len(seg)
    return est


def enumerate_language(t: EDString, cap: int = DEFAULT_LANGUAGE_CAP) -> set[str]:
    """All distinct strings of L(t).  Refuses when the choice product
    exceeds ``cap`` (raises :class:`CapExceeded`)."""
    if language_size_estimate(t) > cap:
        raise CapExceeded(
            f"language product {language_size_estimate(t)} exceeds cap {cap}"
        )
    out: set[str] = {""}
    for seg in t.segments:
        variants = set(seg)
        out = {prefix + v for prefix in out for v in variants}
    return out


def membership(s: str, t: EDString) -> bool:
    """Whether ``s`` is in L(t), by a prefix-length set sweep over segments.

    Independent of the intersection-graph machinery; used as the witness
    verification oracle.
    """
    positions = {0}
    for seg in t.segments:
        nxt = set()
        for q in positions:
            for v in seg:
                if not v:
                    nxt.add(q)
                elif s.startswith(v, q):
                    nxt.add(q + len(v))
        if not nxt:
            return False
        positions = nxt
    return len(s) in positions


def iter_alignments(t: EDString, cap: int = DEFAULT_LANGUAGE_CAP):
    """Yield every production choice of ``t`` as (string, cum) where
    ``cum[i]`` is the total letter count after segment ``i+1`` (``cum[-1]``
    is the string length).  Raises :class:`CapExceeded` past ``cap``."""
    if language_size_estimate(t) > cap:
        raise CapExceeded("alignment product exceeds cap")
    for choice in product(*t.segments):
        cum = []
        total = 0
        for piece in choice:
            total += len(piece)
            cum.append(total)
        yield "".join(choice), cum
