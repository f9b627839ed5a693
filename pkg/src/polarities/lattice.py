"""Finite complete lattices and the duality with polarities.

``g_minus`` sends a polarity to its lattice of lower closed sets and a
morphism to the meet-preserving map it induces (contravariantly); ``c``
sends a lattice ``L`` to the polarity ``(L, L, <=)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Sequence

from ._config import check_cap
from .category import IsoWitness, try_invert
from .core import LOWER, Polarity, Relation, closed_sets, full_mask, is_subset, members
from .errors import NotALattice
from .morphism import Morphism


@dataclass(frozen=True)
class FiniteLattice:
    """A finite lattice given by its order.

    ``ups[x]`` is the bitset of elements ``y`` with ``x <= y``.  ``elements``
    optionally carries a payload per element (the closed sets, for lattices
    built from polarities) and takes no part in equality.
    """

    ups: tuple[int, ...]
    labels: tuple[str, ...] | None = None
    elements: tuple | None = None

    def __post_init__(self):
        n = len(self.ups)
        if n == 0:
            raise NotALattice("a complete lattice has at least one element")
        for x, up in enumerate(self.ups):
            if not (up >> x) & 1:
                raise NotALattice(f"not reflexive at {x}")
            if up >> n:
                raise NotALattice(f"order row {x} out of range")
            for y in members(up):
                if y != x and (self.ups[y] >> x) & 1:
                    raise NotALattice(f"not antisymmetric at {x}, {y}")
                if not is_subset(self.ups[y], up):
                    raise NotALattice(f"not transitive at {x} <= {y}")
        for x in range(n):
            for y in range(x + 1, n):
                if self._meet_or_none(1 << x | 1 << y) is None or self._join_or_none(1 << x | 1 << y) is None:
                    raise NotALattice(f"elements {x}, {y} lack a meet or join")
        if self._meet_or_none(0) is None or self._join_or_none(0) is None:
            raise NotALattice("no top or bottom")

    def __eq__(self, other):
        return isinstance(other, FiniteLattice) and self.ups == other.ups

    def __hash__(self):
        return hash(self.ups)

    @classmethod
    def from_leq(cls, leq: Sequence[Sequence[int]], labels=None, elements=None) -> FiniteLattice:
        """From a 0/1 matrix with ``leq[x][y] == 1`` iff ``x <= y``."""
        ups = tuple(sum(1 << y for y, v in enumerate(row) if v) for row in leq)
        return cls(ups, tuple(labels) if labels is not None else None, elements)

    @classmethod
    def from_covers(cls, n: int, covers, labels=None) -> FiniteLattice:
        """From covering pairs ``(x, y)`` meaning ``x < y``; takes the reflexive-transitive closure."""
        ups = [1 << x for x in range(n)]
        for x, y in covers:
            ups[x] |= 1 << y
        changed = True
        while changed:
            changed = False
            for x in range(n):
                new = ups[x]
                for y in members(ups[x]):
                    new |= ups[y]
                if new != ups[x]:
                    ups[x], changed = new, True
        return cls(tuple(ups), tuple(labels) if labels is not None else None)

    @classmethod
    def chain(cls, n: int) -> FiniteLattice:
        return cls(tuple(full_mask(n) & ~full_mask(x) for x in range(n)))

    @classmethod
    def powerset(cls, k: int) -> FiniteLattice:
        n = 1 << k
        return cls(tuple(sum(1 << y for y in range(n) if is_subset(x, y)) for x in range(n)))

    @property
    def size(self) -> int:
        return len(self.ups)

    @cached_property
    def downs(self) -> tuple[int, ...]:
        n = self.size
        return tuple(sum(1 << x for x in range(n) if (self.ups[x] >> y) & 1) for y in range(n))

    def leq(self, x: int, y: int) -> bool:
        return bool((self.ups[x] >> y) & 1)

    def leq_matrix(self) -> list[list[int]]:
        return [[(up >> y) & 1 for y in range(self.size)] for up in self.ups]

    def lower_bounds(self, mask: int) -> int:
        out = full_mask(self.size)
        for x in members(mask):
            out &= self.downs[x]
        return out

    def upper_bounds(self, mask: int) -> int:
        out = full_mask(self.size)
        for x in members(mask):
            out &= self.ups[x]
        return out

    def _meet_or_none(self, mask):
        lb = self.lower_bounds(mask)
        for z in members(lb):
            if is_subset(lb, self.downs[z]):
                return z
        return None

    def _join_or_none(self, mask):
        ub = self.upper_bounds(mask)
        for z in members(ub):
            if is_subset(ub, self.ups[z]):
                return z
        return None

    def meet_all(self, mask: int) -> int:
        return self._meet_or_none(mask)

    def join_all(self, mask: int) -> int:
        return self._join_or_none(mask)

    def meet(self, x: int, y: int) -> int:
        return self._meet_or_none(1 << x | 1 << y)

    def join(self, x: int, y: int) -> int:
        return self._join_or_none(1 << x | 1 << y)

    @property
    def top(self) -> int:
        return self.meet_all(0)

    @property
    def bottom(self) -> int:
        return self.join_all(0)

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(x, y)`` with ``x < y`` and nothing strictly between."""
        out = []
        for x in range(self.size):
            above = self.ups[x] & ~(1 << x)
            for y in members(above):
                between = above & self.downs[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return out


def _subsets_to_check(lattice: FiniteLattice, exhaustive: bool):
    n = lattice.size
    if exhaustive:
        check_cap("subsets", n, "lattice size for exhaustive subset scan")
        return range(1 << n)
    return [0] + [1 << x | 1 << y for x, y in combinations(range(n), 2)]


@dataclass(frozen=True)
class LatticeMap:
    """A function between finite lattices given by its table: ``table[x]`` is the image of ``x``."""

    dom: FiniteLattice
    cod: FiniteLattice
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.dom.size or any(not 0 <= v < self.cod.size for v in self.table):
            raise ValueError("table does not fit the lattices")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def image(self, mask: int) -> int:
        out = 0
        for x in members(mask):
            out |= 1 << self.table[x]
        return out

    def is_monotone(self) -> bool:
        d, c, t = self.dom, self.cod, self.table
        return all(c.leq(t[x], t[y]) for x in range(d.size) for y in members(d.ups[x]))

    def preserves_meets(self, exhaustive: bool = False) -> bool:
        """All meets when ``exhaustive``; otherwise top and binary meets, which is equivalent."""
        d, c, t = self.dom, self.cod, self.table
        return all(t[d.meet_all(s)] == c.meet_all(self.image(s)) for s in _subsets_to_check(d, exhaustive))

    def preserves_joins(self, exhaustive: bool = False) -> bool:
        d, c, t = self.dom, self.cod, self.table
        return all(t[d.join_all(s)] == c.join_all(self.image(s)) for s in _subsets_to_check(d, exhaustive))

    def then(self, other: LatticeMap) -> LatticeMap:
        """``other`` after ``self``."""
        return LatticeMap(self.dom, other.cod, tuple(other.table[v] for v in self.table))

    @classmethod
    def identity(cls, L: FiniteLattice) -> LatticeMap:
        return cls(L, L, tuple(range(L.size)))

    def kind(self) -> str:
        meets, joins = self.preserves_meets(), self.preserves_joins()
        return {(True, True): "both", (True, False): "inf", (False, True): "sup"}.get((meets, joins), "monotone" if self.is_monotone() else "none")


@dataclass(frozen=True)
class LatticeIso:
    forward: LatticeMap
    inverse: LatticeMap

    def check(self) -> bool:
        f, g = self.forward, self.inverse
        ident_d = tuple(range(f.dom.size))
        ident_c = tuple(range(f.cod.size))
        if f.then(g).table != ident_d or g.then(f).table != ident_c:
            return False
        return f.is_monotone() and g.is_monotone()


# The functor G-


def g_minus_object(A: Polarity) -> FiniteLattice:
    """Closed lower sets of ``A`` ordered by inclusion, in increasing bitset order."""
    family = closed_sets(A, LOWER).members
    ups = tuple(sum(1 << j for j, y in enumerate(family) if is_subset(x, y)) for x in family)
    labels = tuple("{" + ",".join(A.lower_names[i] for i in members(x)) + "}" for x in family)
    return FiniteLattice(ups, labels, family)


def g_minus_morphism(R: Morphism) -> LatticeMap:
    """``Y -> R.down(B.up(Y))`` from closed sets of ``R.cod`` to closed sets of ``R.dom``."""
    LA, LB = g_minus_object(R.dom), g_minus_object(R.cod)
    index = {x: i for i, x in enumerate(LA.elements)}
    B = R.cod
    table = tuple(index[R.rel.down(B.up(y))] for y in LB.elements)
    return LatticeMap(LB, LA, table)


# The functor C


def c_object(L: FiniteLattice) -> Polarity:
    names = L.labels or tuple(str(i) for i in range(L.size))
    return Polarity(Relation(L.size, L.size, L.ups), names, names)


def c_morphism(h: LatticeMap) -> Morphism:
    """For ``h: M -> L`` the relation ``a ~ b`` iff ``a <= h(b)``, a morphism ``C(L) -> C(M)``.

    Raises :class:`IncompatibleRelation` when ``h`` does not preserve meets.
    """
    M, L = h.dom, h.cod
    cols = [L.downs[h.table[b]] for b in range(M.size)]
    return Morphism(c_object(L), c_object(M), Relation.from_columns(L.size, cols))


def epsilon(A: Polarity) -> IsoWitness:
    """Membership ``A -> C(G-(A))`` with its inverse."""
    L = g_minus_object(A)
    cols = list(L.elements)
    forward = Morphism(A, c_object(L), Relation.from_columns(A.lower_size, cols))
    witness = try_invert(forward)
    if witness is None:
        raise AssertionError("membership relation is not an isomorphism")
    return witness


def lattice_unit(L: FiniteLattice) -> LatticeIso:
    """``x -> downset(x)`` from ``L`` onto ``G-(C(L))``."""
    G = g_minus_object(c_object(L))
    index = {x: i for i, x in enumerate(G.elements)}
    forward = LatticeMap(L, G, tuple(index[L.downs[x]] for x in range(L.size)))
    back = [0] * G.size
    for x, i in enumerate(forward.table):
        back[i] = x
    iso = LatticeIso(forward, LatticeMap(G, L, tuple(back)))
    if len(index) != L.size or not iso.check():
        raise AssertionError("principal downsets do not form an isomorphic copy")
    return iso


# Maps with left adjoints


def _composite_on_singletons(R: Morphism) -> list[int]:
    A, B = R.dom, R.cod
    return [B.down(R.rel.up(col)) for col in A.incidence.cols]


def lower_adjoint_relation(R: Morphism) -> Relation:
    """``<B.down R.up A.down>`` as a relation between ``B``'s lower and ``A``'s upper carriers."""
    return Relation.from_columns(R.cod.lower_size, _composite_on_singletons(R))


def preserves_joins(R: Morphism) -> bool:
    """Whether ``<B.down R.up A.down>.down`` reproduces ``B.down R.up A.down`` on every subset of ``A+``.

    This holds exactly when ``R`` has a compatible right adjoint ``S``
    (``A <= R ; S`` and ``S ; R <= B``), equivalently when the lower adjoint
    of ``G-(R)`` (see :func:`g_minus_lower_adjoint`) preserves all meets.
    It is *not* the same as ``G-(R)`` preserving joins, which
    :func:`g_minus_preserves_joins` checks directly; a morphism into a
    polarity whose closed-set lattice is trivial separates the two.
    """
    A, B = R.dom, R.cod
    check_cap("subsets", A.upper_size, "upper carrier of the domain")
    lower = lower_adjoint_relation(R)
    return all(lower.down(xi) == B.down(R.rel.up(A.down(xi))) for xi in range(1 << A.upper_size))


def g_minus_lower_adjoint(R: Morphism) -> LatticeMap:
    """``X -> B.down(R.up(X))``, the lower adjoint of ``G-(R)``."""
    LA, LB = g_minus_object(R.dom), g_minus_object(R.cod)
    index = {y: i for i, y in enumerate(LB.elements)}
    B = R.cod
    return LatticeMap(LA, LB, tuple(index[B.down(R.rel.up(x))] for x in LA.elements))


def g_minus_preserves_joins(R: Morphism) -> bool:
    """Direct check, over every family of closed sets, that ``G-(R)`` preserves joins."""
    return g_minus_morphism(R).preserves_joins(exhaustive=True)


def is_clat_morphism(R: Morphism) -> bool:
    return preserves_joins(R)


def lower_adjoint(R: Morphism) -> Morphism | None:
    """The compatible lower adjoint ``B -> A`` when ``G-(R)`` preserves joins."""
    if not preserves_joins(R):
        return None
    return Morphism(R.cod, R.dom, lower_adjoint_relation(R))
