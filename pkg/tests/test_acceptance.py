"""Acceptance criteria 1-11, one marked group of tests per criterion.

The terminal summary prints one PASS/FAIL line per criterion.
"""
import random
import time
from itertools import product as cartesian
from pathlib import Path

import pytest

from polarities import (
    UNIT,
    FiniteLattice,
    LatticeMap,
    associator,
    c_morphism,
    c_object,
    closed_sets,
    coequalizer,
    compose,
    dual_morphism,
    dual_object,
    epsilon,
    equalizer,
    factor,
    g_minus_morphism,
    g_minus_object,
    g_minus_preserves_joins,
    hom_enumerate,
    identity,
    is_epi,
    is_mono,
    lattice_unit,
    left_unitor,
    linear_curry,
    linear_uncurry,
    preserves_joins,
    product,
    right_unitor,
    standardize,
    symmetry,
    tensor_object,
    try_invert,
    tuple_morphism,
)
from polarities import oracles
from polarities.generators import all_polarities, polarities_up_to_permutation, random_morphism, random_polarity, random_relation
from polarities.io import parse_context, parse_lattice, parse_morphism, serialize_context, serialize_lattice, serialize_morphism
from strategies import CAL_B, FULL23, NEQ2

FIXTURES = Path(__file__).parent / "fixtures"
criterion = pytest.mark.criterion


def chains(rng, n, size):
    objs = [random_polarity(rng, size) for _ in range(n + 1)]
    return [random_morphism(rng, objs[i], objs[i + 1]) for i in range(n)]


def closure_zoo(k):
    """One polarity per closure system on at most ``k`` points, up to permutation.

    The tensor of two polarities depends only on the closure operators of
    their lower carriers, so these cover every case at those sizes.
    """
    seen, zoo = set(), []
    for P in polarities_up_to_permutation(k, k):
        key = (P.lower_size, standardize(P)[0].incidence)
        if key not in seen:
            seen.add(key)
            zoo.append(P)
    return zoo


@criterion(1, "category laws on 1000 random instances in under 10 s")
def test_category_laws():
    rng = random.Random(1)
    start = time.perf_counter()
    for _ in range(1000):
        R, S, T = chains(rng, 3, 4)
        assert compose(identity(R.dom), R) == R
        assert compose(R, identity(R.cod)) == R
        assert compose(compose(R, S), T) == compose(R, compose(S, T))
    elapsed = time.perf_counter() - start
    assert elapsed < 10, f"took {elapsed:.1f} s"


@criterion(2, "left and right compatibility conditions agree pairwise on 1000 random instances")
def test_compatibility_hexads():
    rng = random.Random(2)
    for _ in range(1000):
        A, B = random_polarity(rng, 4), random_polarity(rng, 4)
        R = random_relation(rng, A.lower_size, B.upper_size)
        left, right = oracles.left_conditions(A, R), oracles.right_conditions(B, R)
        assert len(set(left)) == 1, (A, R, left)
        assert len(set(right)) == 1, (B, R, right)


@criterion(3, "dual is an involution that reverses composition, 500 instances")
def test_duality_involution():
    rng = random.Random(3)
    for _ in range(500):
        R, S = chains(rng, 2, 4)
        A = R.dom
        assert dual_object(dual_object(A)) == A
        assert dual_morphism(dual_morphism(R)) == R
        assert dual_morphism(compose(R, S)) == compose(dual_morphism(S), dual_morphism(R))


@criterion(4, "is_mono and is_epi agree with brute-force cancellation on all polarities with carriers <= 3")
def test_mono_epi_cancellation():
    # representatives up to row/column permutation; mono and epi are invariant under relabelling
    big = polarities_up_to_permutation(3, 3)
    small = polarities_up_to_permutation(2, 2)
    tests = [UNIT] + small
    checked = 0
    for B in big:
        for C in small:
            for R in hom_enumerate(B, C) + hom_enumerate(C, B):
                assert is_mono(R) == oracles.is_mono_by_cancellation(R.dom, R.rel, tests), R
                assert is_epi(R) == oracles.is_epi_by_cancellation(R.cod, R.rel, tests), R
                checked += 1
    assert checked > 5000


@criterion(5, "factorization recomposes with epi and mono legs; try_invert succeeds iff mono and epi")
def test_factorization_and_balance():
    rng = random.Random(5)
    for _ in range(500):
        (R,) = chains(rng, 1, 4)
        f = factor(R)
        assert compose(f.epi, f.mono) == R
        assert is_epi(f.epi) and is_mono(f.mono)
        w = try_invert(R)
        assert (w is not None) == (is_mono(R) and is_epi(R))
        if w is not None:
            assert compose(w.forward, w.inverse) == identity(R.dom)
            assert compose(w.inverse, w.forward) == identity(R.cod)


@criterion(6, "duality: epsilon and lattice unit natural isos, G- and C functorial")
def test_duality_natural_isos():
    for m, n in cartesian(range(4), range(4)):
        for A in all_polarities(m, n, min_size=0):
            if (A.lower_size, A.upper_size) != (m, n):
                continue
            assert epsilon(A).check()
            assert lattice_unit(g_minus_object(A)).check()
            assert g_minus_morphism(identity(A)) == LatticeMap.identity(g_minus_object(A))
    rng = random.Random(6)
    for _ in range(200):
        R, S = chains(rng, 2, 3)
        A, B = R.dom, R.cod
        g = g_minus_morphism(R)
        assert compose(R, epsilon(B).forward) == compose(epsilon(A).forward, c_morphism(g))
        uA, uB = lattice_unit(g.cod), lattice_unit(g.dom)
        assert uB.forward.then(g_minus_morphism(c_morphism(g))).table == g.then(uA.forward).table
        assert g_minus_morphism(compose(R, S)) == g_minus_morphism(S).then(g)
        h = g_minus_morphism(S)
        assert c_morphism(h.then(g)) == compose(c_morphism(g), c_morphism(h))
        assert c_morphism(LatticeMap.identity(g.dom)) == identity(c_object(g.dom))


@criterion(7, "the six adjoint conditions agree on 500 random morphisms and match G-(R) preserving all joins")
def test_adjoint_conditions_agree():
    rng = random.Random(7)
    disagreements = []
    for _ in range(500):
        (R,) = chains(rng, 1, 3)
        conds = oracles.adjoint_conditions(R)
        direct = g_minus_preserves_joins(R)
        if len(set(conds)) > 1 or preserves_joins(R) != direct:
            disagreements.append((R, conds, direct))
    assert not disagreements, f"{len(disagreements)} of 500 disagree; first: {disagreements[0]}"


def _cone_index(src, legs):
    """Map each morphism ``src -> apex`` to the tuple of its composites with ``legs``."""
    index = {}
    for T in hom_enumerate(src, legs[0].dom):
        index.setdefault(tuple(compose(T, p) for p in legs), []).append(T)
    return index


@criterion(8, "product and equalizer universal properties by exhaustive search on carriers <= 2")
def test_limits_universal_properties():
    objs = polarities_up_to_permutation(2, 2)
    for A1, A2 in cartesian(objs, repeat=2):
        P = product([A1, A2])
        for B in objs:
            index = _cone_index(B, list(P.projections))
            for R1, R2 in cartesian(hom_enumerate(B, A1), hom_enumerate(B, A2)):
                assert index.get((R1, R2)) == [tuple_morphism(B, [R1, R2], P)]
    for A, B in cartesian(objs, repeat=2):
        homs = hom_enumerate(A, B)
        for R, S in cartesian(homs, repeat=2):
            E, incl = equalizer(R, S)
            assert compose(incl, R) == compose(incl, S)
            Q, proj = coequalizer(R, S)
            assert compose(R, proj) == compose(S, proj)
            for C in objs:
                through = _cone_index(C, [incl])
                for T in hom_enumerate(C, A):
                    if compose(T, R) == compose(T, S):
                        assert len(through.get((T,), [])) == 1, (R, S, T)
                after = {}
                for U in hom_enumerate(Q, C):
                    after.setdefault(compose(proj, U), []).append(U)
                for T in hom_enumerate(B, C):
                    if compose(R, T) == compose(S, T):
                        assert len(after.get(T, [])) == 1, (R, S, T)


@criterion(9, "unitors, symmetry and associator invert for |A-||B-||C-| <= 8; currying is a bijection; under 60 s")
def test_tensor_coherence():
    start = time.perf_counter()
    z2, z3 = closure_zoo(2), closure_zoo(3)
    for A in z3:
        std, _ = standardize(A)
        assert tensor_object(UNIT, A).incidence == std.incidence
        assert left_unitor(A).check() and right_unitor(A).check()
    for A, B in cartesian(z3, repeat=2):
        if A.lower_size * B.lower_size <= 8:
            assert symmetry(A, B).check()
    points = [P for P in z2 if P.lower_size <= 1]
    triples = list(cartesian(z2, repeat=3))
    for big in (P for P in z3 if P.lower_size == 3):
        for X, Y in cartesian(points, repeat=2):
            triples += [(big, X, Y), (X, big, Y), (X, Y, big)]
    for A, B, C in triples:
        assert A.lower_size * B.lower_size * C.lower_size <= 8
        assert associator(A, B, C).check()
        src = hom_enumerate(tensor_object(A, B), dual_object(C))
        dst = hom_enumerate(A, dual_object(tensor_object(B, C)))
        assert len(src) == len(dst)
        curried = [linear_curry(R, A, B, C) for R in src]
        assert sorted(K.rel.bits for K in curried) == [K.rel.bits for K in dst]
        assert all(linear_uncurry(K, A, B, C) == R for R, K in zip(src, curried))
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"took {elapsed:.1f} s"


@criterion(10, "worked fixtures: 4-element, 2-chain and 1-element lattices, recomputed by the oracle")
def test_worked_fixtures():
    expected = {
        "powerset2.cxt": FiniteLattice.powerset(2),
        "calB.cxt": FiniteLattice.chain(2),
        "full.cxt": FiniteLattice.chain(1),
    }
    for name, lattice in expected.items():
        A = parse_context((FIXTURES / name).read_text(encoding="utf-8")).polarity
        family = oracles.closed_sets(A)
        L = g_minus_object(A)
        assert L.size == len(family) == lattice.size
        assert L == lattice
        assert sorted(closed_sets(A).members) == sorted(sum(1 << i for i in x) for x in family)
    assert g_minus_object(NEQ2).size == 4 and g_minus_object(CAL_B).size == 2 and g_minus_object(FULL23).size == 1


@criterion(11, "Burmeister and JSON round trips are byte-identical on the fixture corpus")
def test_io_round_trips():
    contexts = sorted(FIXTURES.glob("*.cxt")) + [FIXTURES / n for n in ("calB.json", "powerset2.json", "empty.json")]
    assert len(contexts) >= 8
    for path in contexts:
        raw = path.read_text(encoding="utf-8")
        assert serialize_context(parse_context(raw)) == raw, path.name
    for name in ("identity_calB.json", "inline_membership.json", "raw_empty_calB.json"):
        raw = (FIXTURES / name).read_text(encoding="utf-8")
        assert serialize_morphism(parse_morphism(raw, FIXTURES, raw=True)) == raw, name
    raw = (FIXTURES / "diamond.json").read_text(encoding="utf-8")
    assert serialize_lattice(parse_lattice(raw)) == raw
