from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carrychain.combinat import Composition, Permutation, all_permutations
from carrychain.matrix import amazing_matrix, descent_polynomial
from carrychain.oracle import (
    GroupAlgebraElement,
    OracleBoundError,
    enumerate_b_shuffles,
    group_identity,
    group_product,
    idempotent_group,
    oracle_descent_polynomial,
    oracle_transition_matrix,
    ribbon_sum,
    s_word_to_group,
    shuffle_element_from_basis,
)


def perm(*images):
    return Permutation(images)


def support(element):
    return set(element.terms)


class TestRibbonSum:
    def test_single_part_is_identity(self):
        for n in range(1, 6):
            assert support(ribbon_sum(Composition((n,)))) == {Permutation.identity(n)}

    def test_all_ones_degree_two(self):
        assert support(ribbon_sum(Composition((1, 1)))) == {perm(2, 1)}

    def test_two_one(self):
        assert support(ribbon_sum(Composition((2, 1)))) == {perm(1, 3, 2), perm(2, 3, 1)}

    def test_partitions_the_group(self):
        for n in range(1, 6):
            seen = 0
            for p in all_permutations(n):
                seen += 1
            total = 0
            from carrychain.combinat import compositions

            for comp in compositions(n):
                total += len(ribbon_sum(comp).terms)
            assert total == seen

    def test_bound(self):
        with pytest.raises(OracleBoundError):
            ribbon_sum(Composition((9,)))


class TestSWordToGroup:
    def test_single_part(self):
        assert support(s_word_to_group(Composition((2,)))) == {Permutation.identity(2)}

    def test_one_one(self):
        assert support(s_word_to_group(Composition((1, 1)))) == {perm(1, 2), perm(2, 1)}

    def test_finest_word_is_whole_group(self):
        element = s_word_to_group(Composition((1, 1, 1)))
        assert len(element.terms) == 6
        assert all(coeff == 1 for coeff in element.terms.values())

    def test_is_sum_of_coarser_ribbons(self):
        from carrychain.combinat import compositions

        comp = Composition((2, 1, 2))
        total = GroupAlgebraElement(5, {})
        for other in compositions(5):
            if other.descent_set() <= comp.descent_set():
                total = total + ribbon_sum(other)
        assert s_word_to_group(comp) == total


class TestGroupProduct:
    def test_identity_neutral(self):
        u = GroupAlgebraElement(3, {perm(2, 3, 1): Fraction(5, 7), perm(1, 3, 2): Fraction(-2)})
        assert group_product(group_identity(3), u) == u
        assert group_product(u, group_identity(3)) == u

    def test_degree_two_idempotents(self):
        e1 = GroupAlgebraElement(2, {perm(1, 2): Fraction(1, 2), perm(2, 1): Fraction(-1, 2)})
        e2 = GroupAlgebraElement(2, {perm(1, 2): Fraction(1, 2), perm(2, 1): Fraction(1, 2)})
        assert group_product(e1, e1) == e1
        assert group_product(e2, e2) == e2
        assert group_product(e1, e2).is_zero()

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            group_product(group_identity(2), group_identity(3))

    def test_bound(self):
        with pytest.raises(OracleBoundError):
            group_product(group_identity(9), group_identity(9))

    def test_composition_order(self):
        # (p * q)(i) = p(q(i)) carried bilinearly
        u = GroupAlgebraElement(3, {perm(2, 3, 1): Fraction(1)})
        v = GroupAlgebraElement(3, {perm(1, 3, 2): Fraction(1)})
        product = group_product(u, v)
        assert support(product) == {perm(2, 3, 1) * perm(1, 3, 2)}

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 5).flatmap(lambda n: st.tuples(*(_group_elements(n) for _ in range(3)))))
    def test_associative(self, uvw):
        u, v, w = uvw
        assert group_product(group_product(u, v), w) == group_product(u, group_product(v, w))


def _group_elements(n):
    permutation = st.permutations(list(range(1, n + 1))).map(lambda im: Permutation(tuple(im)))
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=6)
    return st.lists(st.tuples(permutation, coeff), max_size=4).map(
        lambda items: GroupAlgebraElement(n, dict(items))
    )


class TestIdempotentGroup:
    def test_degree_two(self):
        assert idempotent_group(2, 1).terms == {perm(1, 2): Fraction(1, 2), perm(2, 1): Fraction(-1, 2)}
        assert idempotent_group(2, 2).terms == {perm(1, 2): Fraction(1, 2), perm(2, 1): Fraction(1, 2)}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_idempotent_orthogonal_sum(self, n):
        idems = [idempotent_group(n, k) for k in range(1, n + 1)]
        for k, e in enumerate(idems):
            assert group_product(e, e) == e
            for l in range(k + 1, n):
                assert group_product(e, idems[l]).is_zero()
        total = idems[0]
        for e in idems[1:]:
            total = total + e
        assert total == group_identity(n)

    def test_bound(self):
        with pytest.raises(OracleBoundError):
            idempotent_group(7, 1)


class TestEnumerateShuffles:
    def test_two_cards(self):
        shuffles = enumerate_b_shuffles(2, 2)
        assert shuffles.multiplicity == {perm(1, 2): 3, perm(2, 1): 1}

    def test_single_card(self):
        for b in range(1, 6):
            assert enumerate_b_shuffles(1, b).multiplicity == {perm(1): b}

    def test_total_is_word_count(self):
        for n in range(1, 6):
            for b in range(1, 5):
                assert enumerate_b_shuffles(n, b).total() == b**n

    def test_support_rule_detects_orientation(self):
        # at n = 4 the set of permutations with at most one descent is not
        # closed under inversion, so this check pins the orientation:
        # (3,1,4,2) has two descents but its inverse only one, hence it IS
        # a 2-shuffle outcome; its inverse (2,4,1,3) is not
        shuffles = enumerate_b_shuffles(4, 2)
        assert perm(3, 1, 4, 2) in shuffles.multiplicity
        assert perm(2, 4, 1, 3) not in shuffles.multiplicity
        expected = {p for p in all_permutations(4) if p.inverse().descent_count() <= 1}
        assert support_of_multiset(shuffles) == expected

    def test_budget(self):
        with pytest.raises(OracleBoundError):
            enumerate_b_shuffles(30, 2)

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("b", (1, 2, 3, 4))
    def test_matches_basis_realization(self, n, b):
        # the enumerated multiset carries the basis coefficients on the
        # inverse supports (multiplicity is a function of the inverse's
        # descent class)
        enumerated = enumerate_b_shuffles(n, b).to_group_algebra()
        assert enumerated == shuffle_element_from_basis(n, b).invert_support()


def support_of_multiset(shuffles):
    return set(shuffles.multiplicity)


class TestOracleTransition:
    def test_two_cards(self):
        assert oracle_transition_matrix(2, 2) == (
            (Fraction(3, 4), Fraction(1, 4)),
            (Fraction(1, 4), Fraction(3, 4)),
        )

    def test_three_cards(self):
        rows = oracle_transition_matrix(3, 2)
        assert rows == tuple(
            tuple(Fraction(v, 8) for v in row) for row in ((4, 4, 0), (1, 6, 1), (0, 4, 4))
        )

    def test_single_card(self):
        assert oracle_transition_matrix(1, 4) == ((Fraction(1),),)

    @pytest.mark.parametrize("n", range(1, 6))
    @pytest.mark.parametrize("b", (2, 3))
    def test_equals_closed_formula(self, n, b):
        # oracle_transition_matrix raises on lumping violations or mismatch
        assert oracle_transition_matrix(n, b) == amazing_matrix(n, b).normalized()

    def test_bound(self):
        with pytest.raises(OracleBoundError):
            oracle_transition_matrix(7, 2)


class TestOracleDescentPolynomial:
    def test_two_cards_two_shuffle(self):
        assert oracle_descent_polynomial(2, 2).coeffs == (3, 1)

    def test_two_cards_four_shuffle(self):
        assert oracle_descent_polynomial(2, 4).coeffs == (10, 6)

    def test_single_card(self):
        for m in range(1, 6):
            assert oracle_descent_polynomial(1, m).coeffs == (m,)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_matches_closed_formula(self, n):
        for b, r in ((2, 1), (2, 2), (2, 3), (3, 1), (5, 1), (7, 1), (8, 1)):
            assert oracle_descent_polynomial(n, b**r).coeffs == descent_polynomial(n, b, r).coeffs
