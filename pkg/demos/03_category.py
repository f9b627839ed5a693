"""Duals, monos and epis, factorization, isomorphisms and normal forms.

Run: python demos/03_category.py
"""
from polarities import (
    Morphism,
    Polarity,
    Relation,
    dual_morphism,
    dual_object,
    factor,
    hom_top,
    is_epi,
    is_mono,
    is_standard,
    separate,
    standardize,
    try_invert,
)

B = Polarity(Relation.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)]))
NEQ = Polarity(Relation.from_pairs(2, 2, [(0, 1), (1, 0)]))

print("dual of B:", dual_object(B).incidence.to_matrix())

R = hom_top(B, B)
print("full B -> B: mono", is_mono(R), "epi", is_epi(R))
f = factor(R)
print("factors through", f.mid.incidence.to_matrix(), "with epi", is_epi(f.epi), "and mono", is_mono(f.mono))
print("dual of the full morphism is full:", dual_morphism(R).rel == hom_top(dual_object(B), dual_object(B)).rel)

# (A, A, !=) is isomorphic to (A, P(A), membership); try_invert finds the inverse.
membership = Polarity(Relation.from_columns(2, [0, 1, 2, 3]))
w = try_invert(Morphism(NEQ, membership, membership.incidence))
print("iso found:", w is not None, "inverse:", w.inverse.rel.to_matrix())

# Separation merges equal rows and columns; standardization rebuilds the upper side as a powerset.
dup = Polarity(Relation(3, 2, (0b01, 0b01, 0b10)))
S, ws = separate(dup)
print("separated:", S.incidence.to_matrix(), "iso:", ws.check())
std, wt = standardize(B)
print("standardized B has", std.upper_size, "upper points; standard:", is_standard(std), "iso:", wt.check())
