"""Random and exhaustive instance generators for tests and ``verify``."""
from __future__ import annotations

import random
from itertools import permutations

from .core import Polarity, Relation
from .morphism import Morphism, compatibilize, identity


def random_relation(rng: random.Random, n_rows: int, n_cols: int, density: float | None = None) -> Relation:
    if density is None:
        density = rng.random()
    rows = tuple(sum(1 << c for c in range(n_cols) if rng.random() < density) for _ in range(n_rows))
    return Relation(n_rows, n_cols, rows)


def random_polarity(rng: random.Random, max_size: int = 4, min_size: int = 0) -> Polarity:
    m = rng.randint(min_size, max_size)
    n = rng.randint(min_size, max_size)
    return Polarity(random_relation(rng, m, n))


def random_morphism(rng: random.Random, A: Polarity, B: Polarity) -> Morphism:
    """A compatible relation ``A -> B``.

    Mixes compatibilized sparse relations with relations built from random
    closed columns, and occasionally the identity when ``A == B``, so that
    small as well as large hom elements turn up.
    """
    if A == B and rng.random() < 0.1:
        return identity(A)
    choice = rng.random()
    if choice < 0.6:
        density = rng.choice([0.0, 0.1, 0.2, 0.3])
        return compatibilize(A, B, random_relation(rng, A.lower_size, B.upper_size, density))
    cols = [A.cl_lower(random_relation(rng, 1, A.lower_size, 0.3).rows[0]) for _ in range(B.upper_size)]
    return compatibilize(A, B, Relation.from_columns(A.lower_size, cols))


def all_polarities(max_lower: int, max_upper: int, min_size: int = 0):
    """Every polarity with carriers within the bounds, by size then bits."""
    for m in range(min_size, max_lower + 1):
        for n in range(min_size, max_upper + 1):
            for bits in range(1 << (m * n)):
                yield Polarity(Relation.from_bits(m, n, bits))


def _canonical_bits(m: int, n: int, bits: int) -> int:
    rows = Relation.from_bits(m, n, bits).rows
    best = None
    for cperm in permutations(range(n)):
        permuted = [sum(((row >> cperm[c]) & 1) << c for c in range(n)) for row in rows]
        key = sorted(permuted)
        value = sum(r << (i * n) for i, r in enumerate(key))
        if best is None or value < best:
            best = value
    return best


def polarities_up_to_permutation(max_lower: int, max_upper: int, min_size: int = 0):
    """One representative per class of polarities under row and column permutations."""
    out = []
    for m in range(min_size, max_lower + 1):
        for n in range(min_size, max_upper + 1):
            seen = set()
            for bits in range(1 << (m * n)):
                canon = _canonical_bits(m, n, bits)
                if canon not in seen:
                    seen.add(canon)
                    out.append(Polarity(Relation.from_bits(m, n, canon)))
    return out


def all_relations(n_rows: int, n_cols: int):
    for bits in range(1 << (n_rows * n_cols)):
        yield Relation.from_bits(n_rows, n_cols, bits)


