"""Polarities, Galois maps and closed sets.

Run: python demos/01_closed_sets.py
"""
from polarities import UPPER, Polarity, Relation, closed_sets
from polarities.core import members

# Two lower points b0, b1 and two upper points; b0 relates to beta0, b1 to both.
B = Polarity(Relation.from_pairs(2, 2, [(0, 0), (1, 0), (1, 1)]), ("b0", "b1"), ("beta0", "beta1"))


def show(mask, names):
    return "{" + ",".join(names[i] for i in members(mask)) + "}"


print("incidence:")
for name, row in zip(B.lower_names, B.incidence.to_matrix()):
    print(f"  {name}: {row}")

# up sends a set of lower points to the upper points they all relate to; down goes back.
for x in range(1 << B.lower_size):
    print(f"up({show(x, B.lower_names)}) = {show(B.up(x), B.upper_names)}", end="   ")
    print(f"closure = {show(B.cl_lower(x), B.lower_names)}")

print("lower closed sets:", [show(x, B.lower_names) for x in closed_sets(B).members])
print("upper closed sets:", [show(x, B.upper_names) for x in closed_sets(B, UPPER).members])

# (A, A, !=) on two points: every subset is closed, giving the Boolean square.
neq = Polarity(Relation.from_pairs(2, 2, [(0, 1), (1, 0)]))
print("closed sets of (A, A, !=):", len(closed_sets(neq).members))
