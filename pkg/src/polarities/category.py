"""Categorical structure: self-duality, monos and epis, factorization, isos."""
from __future__ import annotations

from dataclasses import dataclass

from ._config import check_cap
from .core import Polarity, Relation, full_mask, is_subset, members
from .morphism import Morphism, compose, identity
from .errors import EndpointMismatch


@dataclass(frozen=True)
class FactoredMorphism:
    epi: Morphism
    mid: Polarity
    mono: Morphism


@dataclass(frozen=True)
class IsoWitness:
    forward: Morphism
    inverse: Morphism

    def check(self) -> bool:
        """Both composites are identities, bit for bit."""
        f, g = self.forward, self.inverse
        if f.cod != g.dom or g.cod != f.dom:
            return False
        return compose(f, g) == identity(f.dom) and compose(g, f) == identity(f.cod)

    def then(self, other: IsoWitness) -> IsoWitness:
        return IsoWitness(compose(self.forward, other.forward), compose(other.inverse, self.inverse))


def dual_object(A: Polarity) -> Polarity:
    return Polarity(A.incidence.T, A.upper_labels, A.lower_labels)


def dual_morphism(R: Morphism) -> Morphism:
    return Morphism._trusted(dual_object(R.cod), dual_object(R.dom), R.rel.T)


def is_mono(R: Morphism) -> bool:
    """Whether ``R.down . R.up`` agrees with the closure of ``R.dom``.

    Compatibility already gives ``cl <= R.down R.up``; equality holds exactly
    when every closed set of the domain is ``R``-closed, and closed sets are
    intersections of incidence columns, which are therefore the generators
    checked here.
    """
    rel, B = R.rel, R.dom
    return all(rel.down(rel.up(col)) == col for col in B.incidence.cols)


def is_epi(R: Morphism) -> bool:
    rel, C = R.rel, R.cod
    return all(rel.up(rel.down(row)) == row for row in C.incidence.rows)


def pol(R: Morphism) -> Polarity:
    """The polarity whose incidence is ``R`` itself."""
    return Polarity(R.rel, R.dom.lower_labels, R.cod.upper_labels)


def factor(R: Morphism) -> FactoredMorphism:
    mid = pol(R)
    return FactoredMorphism(Morphism(R.dom, mid, R.rel), mid, Morphism(mid, R.cod, R.rel))


def try_invert(R: Morphism) -> IsoWitness | None:
    """An inverse for ``R`` when it is both mono and epi, else ``None``.

    The inverse is ``rel(cod)`` composed with ``rel(dom)`` through ``pol(R)``.
    """
    if not (is_mono(R) and is_epi(R)):
        return None
    mid = pol(R)
    inverse = compose(Morphism(R.cod, mid, R.cod.incidence), Morphism(mid, R.dom, R.dom.incidence))
    witness = IsoWitness(R, inverse)
    if not witness.check():
        raise AssertionError("mono and epi morphism failed to invert")
    return witness


def is_iso(R: Morphism) -> bool:
    return is_mono(R) and is_epi(R)


def is_lower_separating(A: Polarity) -> bool:
    rows = A.incidence.rows
    return len(set(rows)) == len(rows)


def is_upper_separating(A: Polarity) -> bool:
    cols = A.incidence.cols
    return len(set(cols)) == len(cols)


def is_separating(A: Polarity) -> bool:
    return is_lower_separating(A) and is_upper_separating(A)


def _merge_lower(A: Polarity) -> tuple[Polarity, IsoWitness]:
    # one class per distinct row, labelled and ordered by its least member
    first: dict[int, int] = {}
    for a, row in enumerate(A.incidence.rows):
        first.setdefault(row, a)
    keep = sorted(first.values())
    rows = tuple(A.incidence.rows[a] for a in keep)
    labels = tuple(A.lower_labels[a] for a in keep) if A.lower_labels else None
    hat = Polarity(Relation(len(rows), A.upper_size, rows), labels, A.upper_labels)
    return hat, IsoWitness(Morphism(A, hat, A.incidence), Morphism(hat, A, hat.incidence))


def separate(A: Polarity) -> tuple[Polarity, IsoWitness]:
    """A separating polarity isomorphic to ``A`` with an explicit witness.

    Merges equal rows, then merges equal columns of the result.
    """
    hat, w1 = _merge_lower(A)
    merged, w2 = _merge_lower(dual_object(hat))
    w2 = IsoWitness(dual_morphism(w2.inverse), dual_morphism(w2.forward))
    return dual_object(merged), w1.then(w2)


def standardize(A: Polarity) -> tuple[Polarity, IsoWitness]:
    """The standard polarity on ``A``'s lower carrier.

    Column ``X`` (indexed by the bitset value of ``X``) holds ``cl_A(X)``.
    The witness runs ``A -> standard`` via the standard incidence and back
    via ``A``'s own incidence.
    """
    n = A.lower_size
    check_cap("standardize", n, "lower carrier")
    cols = [A.cl_lower(x) for x in range(1 << n)]
    std = Polarity(Relation.from_columns(n, cols), A.lower_labels, _subset_labels(A.lower_names))
    witness = IsoWitness(Morphism(A, std, std.incidence), Morphism(std, A, A.incidence))
    return std, witness


def _subset_labels(names) -> tuple[str, ...]:
    return tuple("{" + ",".join(names[i] for i in members(x)) + "}" for x in range(1 << len(names)))


def is_standard(A: Polarity) -> bool:
    """Upper carrier is the powerset of the lower one (column ``X`` is subset ``X``),
    incidence is reflexive (``a in X`` gives ``a ~ X``) and transitive
    (``a ~ X`` and ``X ~ X'`` pointwise give ``a ~ X'``)."""
    n = A.lower_size
    if A.upper_size != 1 << n:
        return False
    cols = A.incidence.cols
    for x in range(1 << n):
        if not is_subset(x, cols[x]):
            return False
    rows = A.incidence.rows
    for x in range(1 << n):
        common = full_mask(A.upper_size)
        for a in members(x):
            common &= rows[a]
        for a in members(cols[x]):
            if not is_subset(common, rows[a]):
                return False
    return True


def require_parallel(R: Morphism, S: Morphism) -> None:
    if R.dom != S.dom or R.cod != S.cod:
        raise EndpointMismatch("morphisms are not parallel")
