"""Compatible relations, composition, compatibilization and hom-sets.

Run: python demos/02_morphisms.py
"""
from polarities import (
    IncompatibleRelation,
    Morphism,
    Polarity,
    Relation,
    compatibilize,
    compose,
    hom_enumerate,
    hom_meet,
    hom_top,
    identity,
    is_compatible,
)

B = Polarity(Relation.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)]))
NEQ = Polarity(Relation.from_pairs(2, 2, [(0, 1), (1, 0)]))

# The identity on a polarity is its own incidence relation.
print("identity on B:", identity(B).rel.to_matrix())

# Not every relation is compatible; the constructor checks.
try:
    Morphism(B, B, Relation.empty(2, 2))
except IncompatibleRelation as exc:
    print("rejected:", exc)

# compatibilize returns the least compatible relation above a raw one.
print("least compatible relation above the empty one:", compatibilize(B, B, Relation.empty(2, 2)).rel.to_matrix())
print("is that B's incidence?", compatibilize(B, B, Relation.empty(2, 2)).rel == B.incidence)

# Composition passes through the middle polarity's Galois maps.
homs = hom_enumerate(B, NEQ)
print(f"{len(homs)} morphisms B -> (A, A, !=)")
for R in homs:
    print("  ", R.rel.to_matrix(), "then top:", compose(R, hom_top(NEQ, B)).rel.to_matrix())

# Meets of hom-sets are intersections.
print("meet of all of them:", hom_meet(homs).rel.to_matrix())
print("compatible?", is_compatible(B, NEQ, hom_meet(homs).rel))
