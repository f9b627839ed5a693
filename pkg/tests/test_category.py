import pytest
from hypothesis import given
from hypothesis import strategies as st

from polarities import (
    UNIT,
    CapExceeded,
    Morphism,
    Polarity,
    Relation,
    compose,
    dual_morphism,
    dual_object,
    factor,
    hom_top,
    identity,
    is_epi,
    is_iso,
    is_mono,
    is_separating,
    is_standard,
    restrict_lower,
    restrict_upper,
    separate,
    standardize,
    try_invert,
)
from polarities import oracles
from polarities.core import members
from strategies import CAL_B, NEQ2, composable, morphisms, polarities

# (A, P(A), membership) for A = {a0, a1}; columns are the subsets in bitset order
MEMBERSHIP = Polarity(Relation.from_columns(2, [0, 1, 2, 3]))


class TestDuality:
    def test_examples(self):
        assert dual_object(dual_object(CAL_B)) == CAL_B
        assert dual_object(UNIT) == UNIT
        assert sorted(dual_object(CAL_B).incidence.pairs()) == [(0, 0), (0, 1), (1, 1)]

    @given(composable(2))
    def test_involution_and_reversal(self, chain):
        R, S = chain
        assert dual_morphism(dual_morphism(R)) == R
        assert dual_morphism(identity(R.dom)) == identity(dual_object(R.dom))
        assert dual_morphism(compose(R, S)) == compose(dual_morphism(S), dual_morphism(R))

    @given(morphisms())
    def test_dual_is_compatible(self, R):
        D = dual_morphism(R)
        assert Morphism(D.dom, D.cod, D.rel) == D


def collapsing_pair(R: Morphism):
    """Two distinct maps from the unit that ``R`` identifies, if ``R`` is not mono."""
    B = R.dom
    for y in range(1 << B.lower_size):
        if B.cl_lower(y) != y:
            continue
        y2 = R.rel.down(R.rel.up(y))
        if y2 != y:
            q1 = Morphism(UNIT, B, Relation(1, B.upper_size, (B.up(y),)))
            q2 = Morphism(UNIT, B, Relation(1, B.upper_size, (B.up(y2),)))
            return q1, q2
    return None


class TestMonoEpi:
    @given(polarities())
    def test_identity(self, A):
        assert is_mono(identity(A)) and is_epi(identity(A))

    @given(polarities(), st.data())
    def test_restrictions(self, A, data):
        x = data.draw(st.integers(0, (1 << A.lower_size) - 1))
        xi = data.draw(st.integers(0, (1 << A.upper_size) - 1))
        assert is_mono(restrict_lower(A, x)[1])
        assert is_epi(restrict_upper(A, xi)[1])

    def test_collapsing_pair_from_unit(self):
        R = hom_top(CAL_B, CAL_B)
        assert not is_mono(R)
        q1, q2 = collapsing_pair(R)
        assert q1 != q2 and compose(q1, R) == compose(q2, R)
        assert not oracles.is_mono_by_cancellation(CAL_B, R.rel, [UNIT])

    @given(morphisms())
    def test_closure_characterization(self, R):
        assert is_mono(R) == oracles.is_mono_by_closure(R.rel, R.dom)
        assert is_epi(R) == oracles.is_epi_by_closure(R.rel, R.cod)
        assert is_epi(R) == is_mono(dual_morphism(R))

    @given(morphisms())
    def test_non_monos_collapse_a_pair(self, R):
        pair = collapsing_pair(R)
        assert (pair is None) == is_mono(R)
        if pair:
            assert compose(pair[0], R) == compose(pair[1], R)


class TestFactor:
    @given(polarities())
    def test_identity(self, A):
        assert factor(identity(A)).mid == A

    def test_full(self):
        f = factor(hom_top(CAL_B, NEQ2))
        assert f.mid == Polarity(Relation.full(2, 2))
        assert is_epi(f.epi) and is_mono(f.mono)

    @given(morphisms())
    def test_recomposes(self, R):
        f = factor(R)
        assert compose(f.epi, f.mono) == R
        assert is_epi(f.epi) and is_mono(f.mono)
        assert f.epi.rel == f.mono.rel == R.rel


class TestIsos:
    @given(polarities())
    def test_identity_inverts_to_identity(self, A):
        w = try_invert(identity(A))
        assert w is not None and w.inverse == identity(A) and w.check()

    def test_membership_iso(self):
        R = Morphism(NEQ2, MEMBERSHIP, MEMBERSHIP.incidence)
        w = try_invert(R)
        assert w is not None and w.check()
        assert oracles.find_inverse(NEQ2, MEMBERSHIP, R.rel) == w.inverse.rel

    def test_epi_part_of_non_mono_is_not_iso(self):
        R = hom_top(CAL_B, CAL_B)
        f = factor(R)
        assert try_invert(f.epi) is None
        assert oracles.find_inverse(CAL_B, f.mid, f.epi.rel) is None

    @given(morphisms())
    def test_balanced(self, R):
        w = try_invert(R)
        assert (w is not None) == (is_mono(R) and is_epi(R)) == is_iso(R)
        assert (oracles.find_inverse(R.dom, R.cod, R.rel) is not None) == (w is not None)
        if w:
            assert w.check()


class TestSeparate:
    def test_examples(self):
        assert is_separating(UNIT)
        assert is_separating(NEQ2)
        assert not is_separating(Polarity(Relation.full(2, 1)))

    def test_already_separating(self):
        S, w = separate(NEQ2)
        assert S == NEQ2 and w.forward == identity(NEQ2)

    def test_duplicate_rows(self):
        A = Polarity(Relation(3, 2, (0b01, 0b01, 0b10)))
        S, w = separate(A)
        assert S.lower_size == 2 and w.check()

    @given(polarities())
    def test_separating_and_isomorphic(self, A):
        S, w = separate(A)
        assert is_separating(S) and w.check()
        S2, _ = separate(S)
        assert (S2.lower_size, S2.upper_size) == (S.lower_size, S.upper_size)


class TestStandardize:
    def test_unit(self):
        S, w = standardize(UNIT)
        assert S.upper_size == 2
        assert S.incidence == Relation.from_columns(1, [0, 1])
        assert w.check()

    @given(polarities())
    def test_standard_with_same_closure(self, A):
        S, w = standardize(A)
        assert is_standard(S)
        assert w.check()
        for x in range(1 << A.lower_size):
            assert S.cl_lower(x) == A.cl_lower(x)

    def test_standardness_rejects(self):
        assert not is_standard(CAL_B)
        assert not is_standard(Polarity(Relation.empty(1, 2)))  # reflexivity fails at {a0}

    def test_standardness_checker_against_definition(self):
        # every polarity on one lower point with two upper points: standard iff column X contains X
        for bits in range(4):
            P = Polarity(Relation.from_bits(1, 2, bits))
            cols = P.incidence.cols
            assert is_standard(P) == all(x & ~cols[x] == 0 for x in range(2))

    def test_cap(self, monkeypatch):
        monkeypatch.setenv("POLARITY_CAP", "standardize=1")
        with pytest.raises(CapExceeded):
            standardize(CAL_B)


def test_members_helper():
    assert list(members(0b1011)) == [0, 1, 3]
