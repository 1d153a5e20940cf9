"""Single-letter-alphabet intersection via integer length sets.

A unary ED string is fully described by the sets of run lengths of each
segment.  Concatenating two segments adds their length sets elementwise, so
the whole language is computed by a divide-and-conquer of sumsets; each
sumset is a boolean convolution done with a real FFT and exact thresholding.
"""

from __future__ import annotations

import numpy as np

from .core import CapExceeded

# Beyond this convolution size the 0.5 threshold on a double-precision FFT
# is no longer a safe margin; refuse rather than risk a wrong bit.
MAX_CONVOLUTION = 1 << 24


def _normalize(values) -> list[int]:
    out = sorted(set(int(v) for v in values))
    if out and out[0] < 0:
        raise ValueError("lengths must be non-negative")
    return out


def sumset(a, b) -> list[int]:
    """{x + y : x in a, y in b} as a sorted duplicate-free list."""
    a, b = _normalize(a), _normalize(b)
    if not a or not b:
        return []
    size = a[-1] + b[-1] + 1
    if size > MAX_CONVOLUTION:
        raise CapExceeded(f"sumset support {size} exceeds FFT cap")
    if size <= 64:  # tiny cases: direct is cheaper than transforms
        return sorted({x + y for x in a for y in b})
    fft_len = 1 << (2 * size - 1).bit_length()
    fa = np.zeros(fft_len)
    fb = np.zeros(fft_len)
    fa[a] = 1.0
    fb[b] = 1.0
    conv = np.fft.irfft(np.fft.rfft(fa) * np.fft.rfft(fb), fft_len)[:size]
    return np.nonzero(conv > 0.5)[0].tolist()


def compute_lengths(sets) -> list[int]:
    """Length set of a whole compact unary ED string, by recursive halving."""
    sets = [_normalize(s) for s in sets]
    if not sets:
        raise ValueError("need at least one segment")
    for s in sets:
        if not s:
            raise ValueError("segments must be nonempty")

    def rec(lo: int, hi: int) -> list[int]:
        if hi - lo == 1:
            return sets[lo]
        mid = (lo + hi) // 2
        return sumset(rec(lo, mid), rec(mid, hi))

    return rec(0, len(sets))


def unary_intersect(t1, t2) -> list[int]:
    """Sorted length set of the language intersection of two unary inputs."""
    l1 = compute_lengths(t1)
    l2 = compute_lengths(t2)
    out = []
    i = j = 0
    while i < len(l1) and j < len(l2):
        if l1[i] == l2[j]:
            out.append(l1[i])
            i += 1
            j += 1
        elif l1[i] < l2[j]:
            i += 1
        else:
            j += 1
    return out


def parse_compact(text: str | bytes) -> list[list[int]]:
    """One segment per line, comma-separated non-negative integers."""
    if isinstance(text, (bytes, bytearray)):
        text = text.decode("ascii")
    sets = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            values = [int(part) for part in line.split(",")]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
        if any(v < 0 for v in values):
            raise ValueError(f"line {lineno}: negative length")
        sets.append(_normalize(values))
    if not sets:
        raise ValueError("no segments")
    return sets


def serialize_compact(sets) -> str:
    return "\n".join(",".join(str(v) for v in _normalize(s)) for s in sets) + "\n"


def to_eds_letters(sets, letter: str = "a"):
    """Render a compact unary input as an ordinary ED string."""
    from .core import EDString

    return EDString(tuple(tuple(letter * v for v in s) for s in sets))
