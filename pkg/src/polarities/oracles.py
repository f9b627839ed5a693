"""Brute-force reference implementations.

These work on Python sets of pairs and scan every subset, sharing nothing
with the bitset routines they are used to check.  They are exponential and
meant for carriers of a handful of elements.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import chain, combinations, product

from .core import Polarity, Relation


def subsets(n: int):
    """All subsets of ``range(n)`` as frozensets."""
    items = range(n)
    return [frozenset(c) for c in chain.from_iterable(combinations(items, k) for k in range(n + 1))]


class SetRelation:
    """A relation as an explicit set of ``(row, col)`` pairs."""

    def __init__(self, n_rows, n_cols, pairs):
        self.n_rows, self.n_cols = n_rows, n_cols
        self.pairs = frozenset(pairs)

    @classmethod
    def of(cls, rel: Relation) -> SetRelation:
        return cls(rel.n_rows, rel.n_cols, rel.pairs())

    def to_relation(self) -> Relation:
        return Relation.from_pairs(self.n_rows, self.n_cols, self.pairs)

    def up(self, xs):
        return frozenset(b for b in range(self.n_cols) if all((a, b) in self.pairs for a in xs))

    def down(self, ys):
        return frozenset(a for a in range(self.n_rows) if all((a, b) in self.pairs for b in ys))

    def transpose(self) -> SetRelation:
        return SetRelation(self.n_cols, self.n_rows, {(b, a) for a, b in self.pairs})

    def __eq__(self, other):
        return (self.n_rows, self.n_cols, self.pairs) == (other.n_rows, other.n_cols, other.pairs)

    def __hash__(self):
        return hash((self.n_rows, self.n_cols, self.pairs))


def _inc(P: Polarity) -> SetRelation:
    return SetRelation.of(P.incidence)


def cl_lower(P: Polarity, xs):
    I = _inc(P)
    return I.down(I.up(xs))


def cl_upper(P: Polarity, ys):
    I = _inc(P)
    return I.up(I.down(ys))


def closed_sets(P: Polarity, side: str = "lower") -> list[frozenset]:
    n = P.lower_size if side == "lower" else P.upper_size
    cl = cl_lower if side == "lower" else cl_upper
    return [x for x in subsets(n) if cl(P, x) == x]


def _rect_in(xs, ys, pairs) -> bool:
    return all((a, b) in pairs for a in xs for b in ys)


# compatibility, the six equivalent forms on each side


def left_conditions(A: Polarity, rel: Relation) -> list[bool]:
    I, R = _inc(A), SetRelation.of(rel)
    Xs, Ys = subsets(R.n_rows), subsets(R.n_cols)

    def cl(xs):
        return I.down(I.up(xs))

    c1 = all(cl(x) <= R.down(R.up(x)) for x in Xs)
    c2 = all(cl(R.down(y)) <= R.down(y) for y in Ys)
    c3 = all(R.up(x) <= R.up(cl(x)) for x in Xs)
    c4 = all(_rect_in(cl(x), y, R.pairs) for x in Xs for y in Ys if _rect_in(x, y, R.pairs))
    bracket = {(a, b) for b in range(R.n_cols) for a in cl(R.down({b}))}
    c5 = bracket <= R.pairs
    c6 = all(cl(R.down(y)) == R.down(y) for y in Ys)
    return [c1, c2, c3, c4, c5, c6]


def right_conditions(B: Polarity, rel: Relation) -> list[bool]:
    I, R = _inc(B), SetRelation.of(rel)
    Xs, Ys = subsets(R.n_rows), subsets(R.n_cols)

    def cl(ys):
        return I.up(I.down(ys))

    c1 = all(cl(y) <= R.up(R.down(y)) for y in Ys)
    c2 = all(cl(R.up(x)) <= R.up(x) for x in Xs)
    c3 = all(R.down(y) <= R.down(cl(y)) for y in Ys)
    c4 = all(_rect_in(x, cl(y), R.pairs) for x in Xs for y in Ys if _rect_in(x, y, R.pairs))
    bracket = {(a, b) for a in range(R.n_rows) for b in cl(R.up({a}))}
    c5 = bracket <= R.pairs
    c6 = all(cl(R.up(x)) == R.up(x) for x in Xs)
    return [c1, c2, c3, c4, c5, c6]


def is_compatible(A: Polarity, B: Polarity, rel: Relation) -> bool:
    """Rectangle form: ``X x Y`` inside ``R`` forces ``cl(X) x cl(Y)`` inside ``R``."""
    R = SetRelation.of(rel)
    for x in subsets(R.n_rows):
        for y in subsets(R.n_cols):
            if _rect_in(x, y, R.pairs) and not _rect_in(cl_lower(A, x), cl_upper(B, y), R.pairs):
                return False
    return True


@lru_cache(maxsize=4096)
def hom_set(A: Polarity, B: Polarity) -> tuple[Relation, ...]:
    """Every compatible relation, by scanning all ``2 ** (m * n)`` relations."""
    m, n = A.lower_size, B.upper_size
    cells = [(a, b) for a in range(m) for b in range(n)]
    out = []
    for bits in product((0, 1), repeat=len(cells)):
        rel = Relation.from_pairs(m, n, [c for c, on in zip(cells, bits) if on])
        if is_compatible(A, B, rel):
            out.append(rel)
    return tuple(out)


def compose(R: Relation, B: Polarity, S: Relation) -> Relation:
    Rs, Ss, I = SetRelation.of(R), SetRelation.of(S), _inc(B)
    pairs = {(a, g) for g in range(S.n_cols) for a in Rs.down(I.up(Ss.down({g})))}
    return Relation.from_pairs(R.n_rows, S.n_cols, pairs)


def compat_step(A: Polarity, B: Polarity, rel: Relation) -> Relation:
    """Union of ``cl(X) x cl(Y)`` over *all* rectangles inside the relation."""
    R = SetRelation.of(rel)
    out = set(R.pairs)
    for x in subsets(R.n_rows):
        for y in subsets(R.n_cols):
            if _rect_in(x, y, R.pairs):
                out |= {(a, b) for a in cl_lower(A, x) for b in cl_upper(B, y)}
    return Relation.from_pairs(R.n_rows, R.n_cols, out)


def compatibilize_iterated(A: Polarity, B: Polarity, rel: Relation) -> Relation:
    while True:
        nxt = compat_step(A, B, rel)
        if nxt == rel:
            return rel
        rel = nxt


def least_compatible_superset(A: Polarity, B: Polarity, rel: Relation) -> Relation:
    """Intersection of every compatible relation containing ``rel``, found by scanning supersets."""
    R = SetRelation.of(rel)
    free = [(a, b) for a in range(R.n_rows) for b in range(R.n_cols) if (a, b) not in R.pairs]
    best = None
    for bits in product((0, 1), repeat=len(free)):
        cand = Relation.from_pairs(R.n_rows, R.n_cols, set(R.pairs) | {c for c, on in zip(free, bits) if on})
        if is_compatible(A, B, cand):
            best = cand if best is None else best & cand
    return best


# monos, epis, isos


def is_mono_by_closure(rel: Relation, B: Polarity) -> bool:
    R = SetRelation.of(rel)
    return all(R.down(R.up(x)) <= cl_lower(B, x) for x in subsets(R.n_rows))


def is_epi_by_closure(rel: Relation, C: Polarity) -> bool:
    R = SetRelation.of(rel)
    return all(R.up(R.down(y)) <= cl_upper(C, y) for y in subsets(R.n_cols))


def is_mono_by_cancellation(B: Polarity, rel: Relation, tests) -> bool:
    """Left cancellability of ``rel: B -> C`` against every morphism from each test object."""
    for T in tests:
        seen = set()
        for P in hom_set(T, B):
            key = compose(P, B, rel)
            if key in seen:
                return False
            seen.add(key)
    return True


def is_epi_by_cancellation(C: Polarity, rel: Relation, tests) -> bool:
    """Right cancellability of ``rel: B -> C`` against every morphism into each test object."""
    for T in tests:
        seen = set()
        for P in hom_set(C, T):
            key = compose(rel, C, P)
            if key in seen:
                return False
            seen.add(key)
    return True


def find_inverse(A: Polarity, B: Polarity, rel: Relation):
    """A two-sided inverse of ``rel: A -> B`` found by scanning the hom-set ``B -> A``."""
    for S in hom_set(B, A):
        if compose(rel, B, S) == A.incidence and compose(S, A, rel) == B.incidence:
            return S
    return None


# reduction


def closed_count(P: Polarity) -> int:
    return len(closed_sets(P))


def lower_dispensable(A: Polarity) -> list[int]:
    """Rows equal to the intersection of the other rows containing them (empty intersection = all)."""
    rows = [frozenset(b for b in range(A.upper_size) if (a, b) in A.incidence) for a in range(A.lower_size)]
    out = []
    for a, row in enumerate(rows):
        meet = frozenset(range(A.upper_size))
        for a2, other in enumerate(rows):
            if a2 != a and row <= other:
                meet &= other
        if meet == row:
            out.append(a)
    return out


def upper_dispensable(A: Polarity) -> list[int]:
    return lower_dispensable(Polarity(A.incidence.T))


def is_reduced_by_counting(A: Polarity) -> bool:
    """No single lower or upper deletion keeps the number of closed sets."""
    n = closed_count(A)
    for a in range(A.lower_size):
        keep = [r for r in range(A.lower_size) if r != a]
        sub = Polarity(Relation(len(keep), A.upper_size, tuple(A.incidence.rows[r] for r in keep)))
        if closed_count(sub) == n:
            return False
    T = A.incidence.T
    for b in range(A.upper_size):
        keep = [r for r in range(T.n_rows) if r != b]
        sub = Polarity(Relation(len(keep), T.n_cols, tuple(T.rows[r] for r in keep)))
        if closed_count(sub) == n:
            return False
    return True


# stable relations


def stable_sets(A: Polarity, B: Polarity) -> list[Relation]:
    m, n = A.lower_size, B.lower_size
    cells = [(a, b) for a in range(m) for b in range(n)]
    out = []
    for bits in product((0, 1), repeat=len(cells)):
        T = SetRelation(m, n, [c for c, on in zip(cells, bits) if on])
        ok = all(
            _rect_in(cl_lower(A, x), cl_lower(B, y), T.pairs)
            for x in subsets(m)
            for y in subsets(n)
            if _rect_in(x, y, T.pairs)
        )
        if ok:
            out.append(T.to_relation())
    return out


def least_stable_superset(A: Polarity, B: Polarity, rel: Relation) -> Relation:
    best = Relation.full(A.lower_size, B.lower_size)
    for S in stable_sets(A, B):
        if rel.issubset(S):
            best = best & S
    return best


# maps with left adjoints


def adjoint_conditions(R) -> list[bool]:
    """Six candidate characterizations of ``G-(R)`` preserving joins, each checked directly.

    In order: ``G-(R)`` preserves joins; some compatible ``S: cod -> dom``
    has ``A <= R ; S`` and ``S ; R <= B``; some compatible ``S`` has
    ``S.down`` followed by ``B.up`` equal to ``A.down`` followed by
    ``R.up``; the relation ``L = <B.down R.up A.down>`` is compatible and
    does the same; ``L`` is compatible and ``L.down A.up = B.down R.up``;
    ``L.down = B.down R.up A.down``.  The last five agree with each other;
    the first does not always agree with them.

    The searches over ``S`` use :func:`polarities.morphism.hom_enumerate`,
    which is itself checked against :func:`hom_set`.
    """
    from .morphism import hom_enumerate

    A, B = R.dom, R.cod
    IA, IB, Rs = _inc(A), _inc(B), SetRelation.of(R.rel)
    Xs, Xis = subsets(A.lower_size), subsets(A.upper_size)

    # joins of closed sets of B go to joins of closed sets of A
    family = closed_sets(B)

    def g(y):
        return Rs.down(IB.up(y))

    if len(family) <= 10:
        families = [f for k in range(len(family) + 1) for f in combinations(family, k)]
    else:
        families = [()] + list(combinations(family, 2))
    c1 = all(
        g(IB.down(IB.up(frozenset().union(*f)))) == IA.down(IA.up(frozenset().union(*(g(y) for y in f))))
        for f in families
    )

    def a_sub_rs(S):
        return all(ab in compose(R.rel, B, S.rel).pairs() for ab in A.incidence.pairs())

    candidates = hom_enumerate(B, A)
    c2 = any(
        a_sub_rs(S) and compose(S.rel, A, R.rel).issubset(B.incidence) for S in candidates
    )

    def left_map(xi):
        return Rs.up(IA.down(xi))

    c3 = any(all(left_map(xi) == IB.up(SetRelation.of(S.rel).down(xi)) for xi in Xis) for S in candidates)

    lower = SetRelation(
        B.lower_size, A.upper_size, {(b, al) for al in range(A.upper_size) for b in IB.down(Rs.up(IA.down({al})))}
    )
    lower_rel = lower.to_relation()
    lower_ok = is_compatible(B, A, lower_rel)
    c4 = lower_ok and all(left_map(xi) == IB.up(lower.down(xi)) for xi in Xis)
    c5 = lower_ok and all(IB.down(Rs.up(x)) == lower.down(IA.up(x)) for x in Xs)
    c6 = all(lower.down(xi) == IB.down(Rs.up(IA.down(xi))) for xi in Xis)
    return [c1, c2, c3, c4, c5, c6]
