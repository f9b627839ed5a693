import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarities import (
    UNIT,
    CapExceeded,
    DimensionError,
    EndpointMismatch,
    IncompatibleRelation,
    Morphism,
    Polarity,
    Relation,
    compatibilize,
    compose,
    dual_object,
    g_minus_object,
    hom_enumerate,
    hom_meet,
    hom_top,
    identity,
    is_compatible,
    is_compatible_left,
    is_compatible_right,
    tensor_object,
)
from polarities import oracles
from polarities.morphism import compose_all
from strategies import CAL_B, NEQ2, composable, homs, morphisms, polarities, relations


class TestCompatibility:
    def test_full_relation_is_compatible(self):
        for A in (CAL_B, NEQ2, UNIT):
            for B in (CAL_B, NEQ2, UNIT):
                assert is_compatible(A, B, Relation.full(A.lower_size, B.upper_size))

    def test_own_incidence_is_compatible(self):
        for A in (CAL_B, NEQ2, UNIT):
            assert is_compatible_left(A, A.incidence)
            assert is_compatible(A, A, A.incidence)

    def test_empty_column_fails_on_running_example(self):
        # cl({}) = {b1} is not inside the empty column
        assert not is_compatible_left(CAL_B, Relation.empty(2, 1))

    def test_single_pair_relations_on_running_example(self):
        verdicts = [is_compatible(CAL_B, CAL_B, Relation.from_pairs(2, 2, [p])) for p in [(0, 0), (0, 1), (1, 0), (1, 1)]]
        expected = [oracles.is_compatible(CAL_B, CAL_B, Relation.from_pairs(2, 2, [p])) for p in [(0, 0), (0, 1), (1, 0), (1, 1)]]
        assert verdicts == expected == [False, False, False, False]

    @settings(max_examples=300)
    @given(polarities(3), polarities(3), st.data())
    def test_hexads_agree(self, A, B, data):
        R = data.draw(relations(A.lower_size, B.upper_size))
        left, right = oracles.left_conditions(A, R), oracles.right_conditions(B, R)
        assert len(set(left)) == 1 and left[0] == is_compatible_left(A, R)
        assert len(set(right)) == 1 and right[0] == is_compatible_right(B, R)
        assert is_compatible(A, B, R) == oracles.is_compatible(A, B, R)

    def test_shape_mismatch(self):
        with pytest.raises(DimensionError):
            is_compatible(CAL_B, CAL_B, Relation.empty(2, 3))

    def test_constructor_validates(self):
        with pytest.raises(IncompatibleRelation):
            Morphism(CAL_B, CAL_B, Relation.empty(2, 2))


class TestComposition:
    def test_unit_identity_is_empty(self):
        assert identity(UNIT).rel == Relation.empty(1, 1)

    def test_identity_of_running_example(self):
        I = identity(CAL_B)
        assert compose(I, I) == I

    def test_full_composes_to_full(self):
        for A, B, C in [(CAL_B, NEQ2, UNIT), (NEQ2, NEQ2, CAL_B), (UNIT, CAL_B, NEQ2)]:
            R, S = hom_top(A, B), hom_top(B, C)
            assert compose(R, S) == hom_top(A, C)
            assert compose(R, S).rel == oracles.compose(R.rel, B, S.rel)

    @given(composable(3))
    def test_associativity(self, chain):
        R, S, T = chain
        assert compose(compose(R, S), T) == compose(R, compose(S, T))

    @given(composable(2))
    def test_matches_set_oracle(self, chain):
        R, S = chain
        assert compose(R, S).rel == oracles.compose(R.rel, R.cod, S.rel)

    @given(morphisms())
    def test_identity_laws(self, R):
        assert compose(identity(R.dom), R) == R
        assert compose(R, identity(R.cod)) == R

    def test_endpoint_mismatch(self):
        with pytest.raises(EndpointMismatch):
            compose(identity(CAL_B), identity(NEQ2))

    @given(composable(2), st.data())
    def test_monotone_in_each_argument(self, chain, data):
        R, S = chain
        R2 = data.draw(st.sampled_from([m for m in homs(R.dom, R.cod) if R.rel.issubset(m.rel)]))
        S2 = data.draw(st.sampled_from([m for m in homs(S.dom, S.cod) if S.rel.issubset(m.rel)]))
        assert compose(R, S).rel.issubset(compose(R2, S).rel)
        assert compose(R, S).rel.issubset(compose(R, S2).rel)

    @given(composable(3), st.data())
    def test_composition_preserves_meets_in_the_middle(self, chain, data):
        Q, R, S = chain
        family = data.draw(st.lists(st.sampled_from(homs(R.dom, R.cod)), min_size=1, max_size=3))
        lhs = compose(compose(Q, hom_meet(family)), S).rel
        rhs = Relation.full(Q.dom.lower_size, S.cod.upper_size)
        for Ri in family:
            rhs = rhs & compose(compose(Q, Ri), S).rel
        assert lhs == rhs

    def test_compose_all(self):
        I = identity(CAL_B)
        assert compose_all(I, I, I) == I


class TestCompatibilize:
    def test_empty_on_running_example_gives_identity(self):
        R = compatibilize(CAL_B, CAL_B, Relation.empty(2, 2))
        assert R.rel == CAL_B.incidence
        assert R.rel == oracles.compatibilize_iterated(CAL_B, CAL_B, Relation.empty(2, 2))
        assert (1, 0) in R.rel  # cl({}) x cl^({}) = {b1} x {beta0}

    @given(morphisms())
    def test_compatible_input_is_fixed(self, R):
        assert compatibilize(R.dom, R.cod, R.rel) == R

    @given(polarities(3), polarities(3), st.data())
    def test_least_compatible_superset(self, A, B, data):
        R = data.draw(relations(A.lower_size, B.upper_size))
        got = compatibilize(A, B, R).rel
        assert got == oracles.compatibilize_iterated(A, B, R)
        if A.lower_size * B.upper_size <= 9:
            assert got == oracles.least_compatible_superset(A, B, R)

    @given(polarities(3), polarities(3), st.data())
    def test_closure_operator(self, A, B, data):
        R = data.draw(relations(A.lower_size, B.upper_size))
        S = R | data.draw(relations(A.lower_size, B.upper_size))
        cR = compatibilize(A, B, R).rel
        assert R.issubset(cR)
        assert cR.issubset(compatibilize(A, B, S).rel)
        assert compatibilize(A, B, cR).rel == cR


class TestHomSets:
    def test_unit_hom_set(self):
        assert [m.rel for m in hom_enumerate(UNIT, UNIT)] == [Relation.empty(1, 1), Relation.full(1, 1)]

    def test_frozen_counts(self):
        # recomputed by scanning every relation
        cases = [((CAL_B, CAL_B), 2), ((NEQ2, NEQ2), 16), ((UNIT, UNIT), 2), ((CAL_B, NEQ2), 4), ((NEQ2, CAL_B), 4)]
        for (A, B), count in cases:
            assert len(oracles.hom_set(A, B)) == count
            assert len(hom_enumerate(A, B)) == count

    @given(polarities(3), polarities(3))
    def test_matches_exhaustive_scan(self, A, B):
        got = hom_enumerate(A, B)
        assert [m.rel for m in got] == sorted(oracles.hom_set(A, B), key=lambda r: r.bits)
        assert all(is_compatible(A, B, m.rel) for m in got)

    @settings(max_examples=30)
    @given(polarities(2), polarities(2))
    def test_count_matches_tensor_lattice(self, A, B):
        assert len(hom_enumerate(A, B)) == g_minus_object(tensor_object(A, dual_object(B))).size

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("POLARITY_CAP", "hom_bits=3")
        with pytest.raises(CapExceeded):
            hom_enumerate(CAL_B, CAL_B)

    @given(morphisms())
    def test_meet_examples(self, R):
        assert hom_meet([R]) == R
        assert hom_meet([R, hom_top(R.dom, R.cod)]) == R

    @given(polarities(3), polarities(3), st.data())
    def test_meet_commutes_with_down(self, A, B, data):
        family = data.draw(st.lists(st.sampled_from(homs(A, B)), min_size=1, max_size=4))
        meet = hom_meet(family)
        y = data.draw(st.integers(0, (1 << B.upper_size) - 1))
        expected = (1 << A.lower_size) - 1
        for R in family:
            expected &= R.rel.down(y)
        assert meet.rel.down(y) == expected

    def test_meet_errors(self):
        with pytest.raises(ValueError):
            hom_meet([])
        with pytest.raises(EndpointMismatch):
            hom_meet([identity(CAL_B), identity(NEQ2)])


def test_polarity_equality_ignores_labels():
    assert Polarity(CAL_B.incidence, ("p", "q")) == CAL_B
