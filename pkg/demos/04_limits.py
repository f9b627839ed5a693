"""Products, equalizers and reduction.

Run: python demos/04_limits.py
"""
from polarities import (
    UNIT,
    Morphism,
    Polarity,
    Relation,
    closed_sets,
    compose,
    equalizer,
    hom_enumerate,
    identity,
    is_reduced,
    is_rs_frame,
    product,
    reduce,
    restrict_lower,
    tuple_morphism,
)

NEQ = Polarity(Relation.from_pairs(2, 2, [(0, 1), (1, 0)]), ("a0", "a1"))

P = product([UNIT, UNIT])
print("I x I:", P.object.incidence.to_matrix())
R1, R2 = hom_enumerate(UNIT, UNIT)
T = tuple_morphism(UNIT, [R1, R2], P)
print("tupling recovers the legs:", compose(T, P.projections[0]) == R1 and compose(T, P.projections[1]) == R2)

# Two maps into the unit that agree only at a1.
R = Morphism(NEQ, UNIT, Relation.empty(2, 1))
S = Morphism(NEQ, UNIT, Relation(2, 1, (1, 0)))
E, incl = equalizer(R, S)
print("equalizer lower points:", E.lower_names, "closed sets:", len(closed_sets(E).members))

# Keeping only the agreeing row a1 loses a map: the empty-row map I -> NEQ equalizes but does not factor.
sub, sub_incl = restrict_lower(NEQ, 0b10)
Tm = Morphism(UNIT, NEQ, Relation(1, 2, (0,)))
print("equalizes:", compose(Tm, R) == compose(Tm, S))
print("factors through the restriction:", any(compose(U, sub_incl) == Tm for U in hom_enumerate(UNIT, sub)))
print("factors through the equalizer:", sum(compose(U, incl) == Tm for U in hom_enumerate(UNIT, E)), "way")

# Reduction removes elements without changing the closed-set lattice.
A = Polarity(Relation(3, 2, (0b01, 0b10, 0b00)))
red, _, _ = reduce(A)
print("reduced?", is_reduced(A), "->", red.lower_size, "x", red.upper_size, "reduced:", is_reduced(red))
NEQ3 = Polarity(Relation.from_pairs(3, 3, [(i, j) for i in range(3) for j in range(3) if i != j]))
print("(A, A, !=) on three points is an RS-frame:", is_rs_frame(NEQ3))
print("identity still equalizes with itself:", equalizer(identity(NEQ), identity(NEQ))[0] == NEQ)
