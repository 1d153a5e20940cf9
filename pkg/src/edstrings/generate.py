"""Instance generators: random ED strings and the orthogonal-vectors family."""

from __future__ import annotations

import math
import random
import string

from .core import EDString


def _as_vector(v) -> tuple[int, ...]:
    if isinstance(v, str):
        bits = tuple(int(c) for c in v)
    else:
        bits = tuple(int(c) for c in v)
    if any(b not in (0, 1) for b in bits):
        raise ValueError("vectors must be binary")
    return bits


def ov_to_edsi(vectors) -> tuple[EDString, EDString]:
    """Encode an orthogonal-vectors instance as two ED strings over {0,1}.

    The first output spells, per input vector, one segment per coordinate
    holding 0 and the complemented bit; the second output brackets the
    vector set with optional zero-runs of power-of-two vector widths, so
    the languages intersect exactly when two input vectors are orthogonal.
    """
    vecs = [_as_vector(v) for v in vectors]
    k = len(vecs)
    if k < 2:
        raise ValueError("need at least two vectors")
    d = len(vecs[0])
    if d < 1 or any(len(v) != d for v in vecs):
        raise ValueError("vectors must share a positive length")

    t1_segments = []
    for v in vecs:
        for bit in v:
            u = 1 - bit
            t1_segments.append(("0",) if u == 0 else ("0", "1"))

    runs = tuple(("0" * (d * (1 << i)), "")
                 for i in range(int(math.log2(k)) + 1))
    middle = (tuple("".join(str(b) for b in v) for v in vecs),)
    t2_segments = runs + middle + runs
    return EDString(tuple(t1_segments)), EDString(t2_segments)


def random_eds(seed: int, n_range=(1, 6), seg_size_range=(1, 4),
               len_range=(1, 4), alphabet: int = 3,
               eps_prob: float = 0.2) -> EDString:
    """Seeded random ED string within the given shape bounds.

    Segments consisting of a single empty variant are redrawn: they have no
    EDS text form, and the generator promises serializable output.
    """
    rng = random.Random(seed)
    letters = string.ascii_lowercase[:alphabet]
    n = rng.randint(*n_range)
    segments = []
    for _ in range(n):
        while True:
            size = rng.randint(*seg_size_range)
            variants = []
            for _ in range(size):
                if rng.random() < eps_prob:
                    variants.append("")
                else:
                    length = rng.randint(*len_range)
                    variants.append(
                        "".join(rng.choice(letters) for _ in range(length)))
            if tuple(variants) != ("",):
                break
        segments.append(tuple(variants))
    return EDString(tuple(segments))


def random_unary(seed: int, n_range=(1, 8), seg_size_range=(1, 4),
                 max_value: int = 256) -> list[list[int]]:
    """Seeded random compact unary input (sorted duplicate-free sets)."""
    rng = random.Random(seed)
    n = rng.randint(*n_range)
    return [sorted({rng.randint(0, max_value)
                    for _ in range(rng.randint(*seg_size_range))})
            for _ in range(n)]


def random_ov(seed: int, max_vectors: int = 8, max_dim: int = 6):
    """Seeded random orthogonal-vectors instance."""
    rng = random.Random(seed)
    k = rng.randint(2, max_vectors)
    d = rng.randint(1, max_dim)
    return [tuple(rng.randint(0, 1) for _ in range(d)) for _ in range(k)]
