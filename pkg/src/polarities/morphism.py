"""Compatible relations as morphisms between polarities."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from ._config import check_cap
from .core import LOWER, Polarity, Relation, closed_sets, members, next_closure_sets
from .errors import DimensionError, EndpointMismatch, IncompatibleRelation


def _check_shape(A: Polarity, B: Polarity, R: Relation) -> None:
    if R.shape != (A.lower_size, B.upper_size):
        raise DimensionError(f"relation of shape {R.shape} between {A.lower_size}x? and ?x{B.upper_size}")


def is_compatible_left(A: Polarity, R: Relation) -> bool:
    """Whether closing ``R``'s lower images under ``A`` changes nothing.

    The lower image of a set of columns is the intersection of the single
    column images, and closed sets are closed under intersection, so it is
    enough that every column of ``R`` is closed for ``A``.
    """
    if R.n_rows != A.lower_size:
        raise DimensionError(f"{R.n_rows} rows against a lower carrier of {A.lower_size}")
    cl = A.cl_lower
    return all(cl(col) == col for col in R.cols)


def is_compatible_right(B: Polarity, R: Relation) -> bool:
    if R.n_cols != B.upper_size:
        raise DimensionError(f"{R.n_cols} columns against an upper carrier of {B.upper_size}")
    cl = B.cl_upper
    return all(cl(row) == row for row in R.rows)


def is_compatible(A: Polarity, B: Polarity, R: Relation) -> bool:
    _check_shape(A, B, R)
    return is_compatible_left(A, R) and is_compatible_right(B, R)


@dataclass(frozen=True)
class Morphism:
    """A relation from ``dom``'s lower carrier to ``cod``'s upper carrier.

    Construction checks compatibility and raises
    :class:`IncompatibleRelation` otherwise.
    """

    dom: Polarity
    cod: Polarity
    rel: Relation

    def __post_init__(self):
        _check_shape(self.dom, self.cod, self.rel)
        if not is_compatible_left(self.dom, self.rel):
            raise IncompatibleRelation("relation is not compatible with its domain")
        if not is_compatible_right(self.cod, self.rel):
            raise IncompatibleRelation("relation is not compatible with its codomain")

    @classmethod
    def _trusted(cls, dom: Polarity, cod: Polarity, rel: Relation) -> Morphism:
        # For relations that are compatible by construction; skips the check.
        obj = object.__new__(cls)
        object.__setattr__(obj, "dom", dom)
        object.__setattr__(obj, "cod", cod)
        object.__setattr__(obj, "rel", rel)
        return obj

    def down(self, y: int) -> int:
        return self.rel.down(y)

    def up(self, x: int) -> int:
        return self.rel.up(x)

    def issubset(self, other: Morphism) -> bool:
        _same_endpoints(self, other)
        return self.rel.issubset(other.rel)

    def __le__(self, other: Morphism) -> bool:
        return self.issubset(other)

    def __repr__(self) -> str:
        return f"Morphism({self.dom.lower_size}x{self.dom.upper_size} -> {self.cod.lower_size}x{self.cod.upper_size}: {self.rel!r})"


def _same_endpoints(R: Morphism, S: Morphism) -> None:
    if R.dom != S.dom or R.cod != S.cod:
        raise EndpointMismatch("morphisms have different endpoints")


def identity(A: Polarity) -> Morphism:
    return Morphism._trusted(A, A, A.incidence)


def compose_relations(R: Relation, B: Polarity, S: Relation) -> Relation:
    """Column ``g`` of the result is ``R.down(B.up(S.down({g})))``."""
    return Relation.from_columns(R.n_rows, [R.down(B.up(col)) for col in S.cols])


def compose(R: Morphism, S: Morphism) -> Morphism:
    """Diagrammatic composite: first ``R``, then ``S``, through ``R.cod``."""
    if R.cod != S.dom:
        raise EndpointMismatch("codomain of the first morphism is not the domain of the second")
    return Morphism(R.dom, S.cod, compose_relations(R.rel, R.cod, S.rel))


def compose_all(first: Morphism, *rest: Morphism) -> Morphism:
    out = first
    for m in rest:
        out = compose(out, m)
    return out


def _concepts(R: Relation):
    """Maximal rectangles ``(X, Y)`` of ``R``, i.e. ``X = R.down(Y)``, ``Y = R.up(X)``."""
    if R.n_rows <= R.n_cols:
        check_cap("closed_sets", R.n_rows, "compatibilization rows")
        for x in next_closure_sets(lambda s: R.down(R.up(s)), R.n_rows):
            yield x, R.up(x)
    else:
        check_cap("closed_sets", R.n_cols, "compatibilization columns")
        for y in next_closure_sets(lambda s: R.up(R.down(s)), R.n_cols):
            yield R.down(y), y


def compat_step(A: Polarity, B: Polarity, R: Relation) -> Relation:
    """One application of the rectangle-closing operator.

    Returns the union of ``cl_A(X) x cl^B(Y)`` over rectangles ``X x Y`` inside
    ``R``.  Every rectangle lies in a maximal one and both closures are
    monotone, so maximal rectangles suffice.
    """
    rows = list(R.rows)
    for x, y in _concepts(R):
        cx, cy = A.cl_lower(x), B.cl_upper(y)
        for a in members(cx):
            rows[a] |= cy
    return Relation(R.n_rows, R.n_cols, tuple(rows))


def compatibilize(A: Polarity, B: Polarity, R: Relation) -> Morphism:
    """The least compatible relation containing ``R``.

    Iterates :func:`compat_step` to a fixpoint; on finite carriers the
    iteration stops after at most ``|R| <= rows * cols`` strict steps.
    """
    _check_shape(A, B, R)
    current = R
    while True:
        nxt = compat_step(A, B, current)
        if nxt == current:
            return Morphism(A, B, current)
        current = nxt


def hom_top(A: Polarity, B: Polarity) -> Morphism:
    """The full relation, the empty intersection of the hom-set."""
    return Morphism._trusted(A, B, Relation.full(A.lower_size, B.upper_size))


def hom_meet(Rs: Sequence[Morphism]) -> Morphism:
    if not Rs:
        raise ValueError("hom_meet needs at least one morphism; use hom_top for the empty meet")
    first = Rs[0]
    rel = first.rel
    for R in Rs[1:]:
        _same_endpoints(first, R)
        rel = rel & R.rel
    return Morphism(first.dom, first.cod, rel)


def hom_enumerate(A: Polarity, B: Polarity) -> list[Morphism]:
    """Every compatible relation ``A -> B``, ordered by :attr:`Relation.bits`.

    Columns of a compatible relation are closed for ``A`` and rows are closed
    for ``B``, so candidates are tuples of closed columns filtered on rows.
    """
    m, n = A.lower_size, B.upper_size
    check_cap("hom_bits", m * n, "lower(A) * upper(B)")
    col_choices = closed_sets(A, LOWER).members
    cl = B.cl_upper
    out = []
    for cols in product(col_choices, repeat=n):
        rel = Relation.from_columns(m, cols)
        if all(cl(row) == row for row in rel.rows):
            out.append(Morphism._trusted(A, B, rel))
    out.sort(key=lambda mor: mor.rel.bits)
    return out


__all__ = [
    "Morphism",
    "compat_step",
    "compatibilize",
    "compose",
    "compose_all",
    "compose_relations",
    "hom_enumerate",
    "hom_meet",
    "hom_top",
    "identity",
    "is_compatible",
    "is_compatible_left",
    "is_compatible_right",
]
