"""Restrictions, products, equalizers, their duals, and reduction.

Disjoint unions place all of the first factor's elements first, then the
second's, and so on.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._config import check_cap
from .category import dual_morphism, dual_object, is_epi, is_separating, require_parallel
from .core import Polarity, Relation, check_subset, closed_sets, full_mask, members
from .errors import EndpointMismatch
from .morphism import Morphism


def restrict_lower(A: Polarity, x: int) -> tuple[Polarity, Morphism]:
    """``A`` with its lower carrier cut down to ``x``, and the mono into ``A``."""
    check_subset(x, A.lower_size)
    keep = list(members(x))
    rows = tuple(A.incidence.rows[a] for a in keep)
    labels = tuple(A.lower_labels[a] for a in keep) if A.lower_labels else None
    sub = Polarity(Relation(len(keep), A.upper_size, rows), labels, A.upper_labels)
    return sub, Morphism(sub, A, sub.incidence)


def restrict_upper(A: Polarity, xi: int) -> tuple[Polarity, Morphism]:
    """``A`` with its upper carrier cut down to ``xi``, and the epi out of ``A``."""
    sub, incl = restrict_lower(dual_object(A), xi)
    return dual_object(sub), dual_morphism(incl)


@dataclass(frozen=True)
class ProductBundle:
    """A product (or coproduct) object with its projections (or insertions)."""

    object: Polarity
    legs: tuple[Morphism, ...]
    factors: tuple[Polarity, ...]

    @property
    def projections(self) -> tuple[Morphism, ...]:
        return self.legs

    @property
    def insertions(self) -> tuple[Morphism, ...]:
        return self.legs


def _offsets(sizes):
    out, total = [], 0
    for s in sizes:
        out.append(total)
        total += s
    return out, total


def _sum_labels(names_per_factor):
    return tuple(f"{i}.{name}" for i, names in enumerate(names_per_factor) for name in names)


def product(As: Sequence[Polarity]) -> ProductBundle:
    """Product polarity: ``(j, a) ~ (k, alpha)`` iff ``j != k`` or ``a A_k alpha``.

    The empty product is the polarity with both carriers empty.
    """
    As = tuple(As)
    low_off, n_low = _offsets([A.lower_size for A in As])
    up_off, n_up = _offsets([A.upper_size for A in As])
    rows = []
    for j, A in enumerate(As):
        outside = full_mask(n_up) & ~(full_mask(A.upper_size) << up_off[j])
        for row in A.incidence.rows:
            rows.append(outside | (row << up_off[j]))
    obj = Polarity(
        Relation(n_low, n_up, tuple(rows)),
        _sum_labels([A.lower_names for A in As]),
        _sum_labels([A.upper_names for A in As]),
    )
    legs = []
    for k, Ak in enumerate(As):
        proj_rows = []
        for j, A in enumerate(As):
            if j == k:
                proj_rows.extend(Ak.incidence.rows)
            else:
                proj_rows.extend([full_mask(Ak.upper_size)] * A.lower_size)
        legs.append(Morphism(obj, Ak, Relation(n_low, Ak.upper_size, tuple(proj_rows))))
    return ProductBundle(obj, tuple(legs), As)


def tuple_morphism(B: Polarity, Rs: Sequence[Morphism], P: ProductBundle) -> Morphism:
    """The unique ``T: B -> prod`` with ``T ; P_k = R_k``: ``b T (i, alpha)`` iff ``b R_i alpha``."""
    if len(Rs) != len(P.factors):
        raise EndpointMismatch(f"{len(Rs)} morphisms for {len(P.factors)} factors")
    for R, A in zip(Rs, P.factors):
        if R.dom != B or R.cod != A:
            raise EndpointMismatch("cone leg does not match the product factor")
    up_off, n_up = _offsets([A.upper_size for A in P.factors])
    rows = [0] * B.lower_size
    for R, off in zip(Rs, up_off):
        for b, row in enumerate(R.rel.rows):
            rows[b] |= row << off
    return Morphism(B, P.object, Relation(B.lower_size, n_up, tuple(rows)))


def coproduct(As: Sequence[Polarity]) -> ProductBundle:
    """Coproduct: the dual of the product of the duals, insertions dual to projections.

    The object coincides with :func:`product` bit for bit.
    """
    P = product([dual_object(A) for A in As])
    return ProductBundle(dual_object(P.object), tuple(dual_morphism(p) for p in P.legs), tuple(As))


def cotuple_morphism(C: Polarity, Rs: Sequence[Morphism], Q: ProductBundle) -> Morphism:
    """The unique ``T: coprod -> C`` with ``I_k ; T = R_k``."""
    dual_bundle = ProductBundle(
        dual_object(Q.object), tuple(dual_morphism(i) for i in Q.legs), tuple(dual_object(A) for A in Q.factors)
    )
    T = tuple_morphism(dual_object(C), [dual_morphism(R) for R in Rs], dual_bundle)
    return dual_morphism(T)


def _join_closure_add(A: Polarity, span: set[int], x: int) -> set[int]:
    # span is already closed under joins (closure of unions); adding x only needs s v x
    return span | {A.cl_lower(s | x) for s in span}


def equalizer(R: Morphism, S: Morphism) -> tuple[Polarity, Morphism]:
    """An equalizer of a parallel pair, with its inclusion into the domain.

    A closed set ``X`` of the domain survives when ``R.up(X) == S.up(X)``;
    these sets are closed under joins and make up the closed-set lattice of
    the equalizer.  The object keeps the rows on which ``R`` and ``S`` agree
    (a restriction of the domain) and, when joins of those rows' closures do
    not reach every surviving set, adds one lower element per missing
    generator, with row ``A.up(X)``.
    """
    require_parallel(R, S)
    A = R.dom
    agree = [a for a, (r, s) in enumerate(zip(R.rel.rows, S.rel.rows)) if r == s]
    surviving = [x for x in closed_sets(A).members if R.rel.up(x) == S.rel.up(x)]
    span = {A.cl_lower(0)}
    for a in agree:
        span = _join_closure_add(A, span, A.cl_lower(1 << a))
    extras = []
    for x in sorted(surviving, key=lambda x: (x.bit_count(), x)):
        if x not in span:
            extras.append(x)
            span = _join_closure_add(A, span, x)
    if not extras:
        keep = 0
        for a in agree:
            keep |= 1 << a
        return restrict_lower(A, keep)
    names = A.lower_names
    labels = [names[a] for a in agree]
    for x in extras:
        label = "{" + ",".join(names[i] for i in members(x)) + "}"
        while label in labels:
            label += "'"
        labels.append(label)
    rows = tuple(A.incidence.rows[a] for a in agree) + tuple(A.up(x) for x in extras)
    obj = Polarity(Relation(len(rows), A.upper_size, rows), tuple(labels), A.upper_labels)
    return obj, Morphism(obj, A, obj.incidence)


def coequalizer(R: Morphism, S: Morphism) -> tuple[Polarity, Morphism]:
    obj, incl = equalizer(dual_morphism(R), dual_morphism(S))
    return dual_object(obj), dual_morphism(incl)


def lower_reducible(A: Polarity) -> list[int]:
    """Lower elements whose deletion leaves a restriction isomorphic to ``A``.

    Restriction inclusions are always mono, so an inclusion is an iso exactly
    when it is epi.  Any restriction that is isomorphic to ``A`` at all has an
    epi inclusion (closed sets of a restriction are traces of closed sets of
    ``A``, a surjection that is a bijection iff the counts agree), and every
    proper restriction sits inside a single-element deletion, so checking
    single deletions decides reducedness.
    """
    full = full_mask(A.lower_size)
    return [a for a in range(A.lower_size) if is_epi(restrict_lower(A, full & ~(1 << a))[1])]


def upper_reducible(A: Polarity) -> list[int]:
    return lower_reducible(dual_object(A))


def is_reduced(A: Polarity) -> bool:
    check_cap("reduction", max(A.lower_size, A.upper_size), "carrier")
    return not lower_reducible(A) and not upper_reducible(A)


def is_rs_frame(A: Polarity) -> bool:
    return is_separating(A) and is_reduced(A)


def reduce(A: Polarity) -> tuple[Polarity, Morphism, Morphism]:
    """Delete reducible elements one at a time until none is left.

    Returns the reduced polarity, the lower inclusion ``A|X -> A`` and the
    upper restriction map out of ``A|X``.
    """
    check_cap("reduction", max(A.lower_size, A.upper_size), "carrier")
    keep = full_mask(A.lower_size)
    current = A
    while True:
        dropped = lower_reducible(current)
        if not dropped:
            break
        kept = list(members(keep))
        keep &= ~(1 << kept[dropped[-1]])
        current, _ = restrict_lower(A, keep)
    low, incl = current, restrict_lower(A, keep)[1]
    keep_up = full_mask(low.upper_size)
    current = low
    while True:
        dropped = upper_reducible(current)
        if not dropped:
            break
        kept = list(members(keep_up))
        keep_up &= ~(1 << kept[dropped[-1]])
        current, _ = restrict_upper(low, keep_up)
    reduced, proj = restrict_upper(low, keep_up)
    return reduced, incl, proj
