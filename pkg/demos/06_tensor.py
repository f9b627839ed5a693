"""Stable relations, the tensor product, coherence isomorphisms and currying.

Run: python demos/06_tensor.py
"""
from polarities import (
    UNIT,
    Polarity,
    Relation,
    associator,
    dual_object,
    hom_enumerate,
    identity,
    internal_hom,
    left_unitor,
    linear_curry,
    linear_uncurry,
    stable_closure,
    stable_sets,
    symmetry,
    tensor_morphism,
    tensor_object,
)

B = Polarity(Relation.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)]))
NEQ = Polarity(Relation.from_pairs(2, 2, [(0, 1), (1, 0)]))

print("stable relations on B x B:", [format(t, "04b")[::-1] for t in stable_sets(B, B)])
print("stable closure of the empty relation:", stable_closure(B, B, Relation.empty(2, 2)).rel.to_matrix())

T = tensor_object(B, NEQ)
print("B (x) NEQ:", T.lower_size, "lower points,", T.upper_size, "upper points")
print("I (x) B = standardization of B:", left_unitor(B).check())
print("symmetry B (x) NEQ = NEQ (x) B:", symmetry(B, NEQ).check())
print("associator:", associator(B, UNIT, NEQ).check())
print("id (x) id is the identity:", tensor_morphism(identity(B), identity(UNIT)) == identity(tensor_object(B, UNIT)))

H = internal_hom(UNIT, B)
print("I -o B:", H.incidence.to_matrix())
print("maps I -> (B -o NEQ):", len(hom_enumerate(UNIT, internal_hom(B, NEQ))), "maps B -> NEQ:", len(hom_enumerate(B, NEQ)))

src = hom_enumerate(tensor_object(UNIT, B), dual_object(UNIT))
curried = [linear_curry(R, UNIT, B, UNIT) for R in src]
print(f"{len(src)} maps I (x) B -> I* and", len(hom_enumerate(UNIT, dual_object(tensor_object(B, UNIT)))), "maps I -> (B (x) I)*")
print("round trips:", all(linear_uncurry(K, UNIT, B, UNIT) == R for R, K in zip(src, curried)))
