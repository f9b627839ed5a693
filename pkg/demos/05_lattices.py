"""Closed-set lattices and back: G-, C, the natural isomorphisms and adjoints.

Run: python demos/05_lattices.py
"""
from polarities import (
    FiniteLattice,
    LatticeMap,
    Morphism,
    Polarity,
    Relation,
    c_morphism,
    c_object,
    epsilon,
    g_minus_lower_adjoint,
    g_minus_morphism,
    g_minus_object,
    g_minus_preserves_joins,
    hom_top,
    lattice_unit,
    lower_adjoint,
    preserves_joins,
)
from polarities.io import hasse_dot

B = Polarity(Relation.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)]))
NEQ = Polarity(Relation.from_pairs(2, 2, [(0, 1), (1, 0)]), ("a0", "a1"))

L = g_minus_object(NEQ)
print("G-(NEQ) has", L.size, "elements:", L.labels)
print(hasse_dot(L, "G-(NEQ)"), end="")

# A morphism induces a meet-preserving map between the lattices, in the opposite direction.
g = g_minus_morphism(hom_top(B, NEQ))
print("G-(full B -> NEQ):", g.table, "preserves meets:", g.preserves_meets())

# C turns a lattice into (L, L, <=); membership gives A = C(G-(A)).
w = epsilon(NEQ)
print("membership is an iso:", w.check(), "rows:", w.forward.rel.to_matrix())
print("L = G-(C(L)) via principal downsets:", lattice_unit(FiniteLattice.chain(3)).check())

# A map that preserves meets but not joins, and what C makes of it.
sq = FiniteLattice.powerset(2)
h = LatticeMap(sq, sq, (0, 0, 0, 3))
Ch = c_morphism(h)
print("h preserves meets", h.preserves_meets(), "joins", h.preserves_joins())
print("C(h) has a compatible lower adjoint:", lower_adjoint(Ch) is not None)

# preserves_joins decides whether the lower adjoint of G-(R) preserves meets.
for R in (c_morphism(LatticeMap.identity(sq)), Ch):
    print(
        "preserves_joins:", preserves_joins(R),
        "lower adjoint preserves meets:", g_minus_lower_adjoint(R).preserves_meets(exhaustive=True),
        "G-(R) preserves joins:", g_minus_preserves_joins(R),
    )

# The two can differ: below, G-(A) is a single point.
A = Polarity(Relation.empty(0, 1))
R = Morphism(A, B, Relation.empty(0, 2))
print("from a one-point lattice:", preserves_joins(R), g_minus_preserves_joins(R))
print("C of the 2-chain:", c_object(FiniteLattice.chain(2)).incidence.to_matrix())
