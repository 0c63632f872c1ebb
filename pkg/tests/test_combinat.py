"""Tests for blocks, supercompositions, orders and the Mobius function."""

from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sncsym import combinat as sc
from sncsym import verify
from sncsym.combinat import Supercomposition
from sncsym.errors import BidegreeError, InvalidIndexError
from sncsym.superpartition import Superpartition, partitions, strict_partitions, superpartitions

from conftest import idx, indices, sp


BELL = (1, 1, 2, 5, 15, 52)


class TestBlocks:
    def test_oplus_of_two_fermionic_blocks_is_undefined(self):
        assert sc.oplus((0, 1), (0, 2)) is None

    def test_oplus_merges_and_sorts(self):
        assert sc.oplus((0, 3), (1, 2)) == (0, 1, 2, 3)

    def test_block_key(self):
        assert sc.block_key((0,)) == 0
        assert sc.block_key((0, 2, 5)) == 2
        assert sc.block_key((3, 4)) == 3

    def test_empty_block_rejected(self):
        with pytest.raises(InvalidIndexError):
            sc.make_block([])


class TestSupercomposition:
    def test_overlapping_blocks_rejected(self):
        with pytest.raises(InvalidIndexError):
            Supercomposition(((0, 1), (1, 2)))

    def test_fermionic_after_bosonic_rejected(self):
        with pytest.raises(InvalidIndexError):
            Supercomposition(((1,), (0, 2)))

    def test_from_blocks_keeps_fermionic_order(self):
        K = Supercomposition.from_blocks([(3,), (0, 2), (1,), (0, 4)])
        assert K.blocks == ((0, 2), (0, 4), (1,), (3,))

    def test_bidegree(self):
        assert idx("({0},{0,1},{2})").bidegree == (2, 2)
        assert idx("()").bidegree == (0, 0)

    def test_trivial(self):
        assert Supercomposition(((0,), (0,), (1,))).is_trivial()
        assert not idx("({0},{0,1},{2})").is_trivial()

    def test_string_form(self):
        assert str(idx("({0}, {0,1}, {2})")) == "({0},{0,1},{2})"


class TestEnumeration:
    @pytest.mark.parametrize("n", range(6))
    def test_set_partitions_are_bell_numbers(self, n):
        assert len(sc.set_partitions(n)) == BELL[n]

    def test_empty_set_partition(self):
        assert sc.set_partitions(0) == [()]

    @pytest.mark.parametrize("n, total", [(0, 2), (1, 4), (2, 12), (3, 44), (4, 188)])
    def test_set_superpartition_totals(self, n, total):
        assert sc.count_set_superpartitions(n) == total

    @pytest.mark.parametrize("m, count", [(0, 2), (1, 5), (2, 4), (3, 1), (4, 0)])
    def test_bidegree_two(self, m, count):
        assert len(sc.set_superpartitions(2, m)) == count

    def test_bidegree_two_two(self):
        found = {str(I) for I in sc.set_superpartitions(2, 2)}
        assert found == {"({0},{0,1,2})", "({0},{0,1},{2})", "({0},{0,2},{1})", "({0,1},{0,2})"}

    def test_degenerate_degrees(self):
        assert [str(I) for I in sc.set_superpartitions(0, 1)] == ["({0})"]
        assert [str(I) for I in sc.set_superpartitions(0, 0)] == ["()"]

    def test_partial_supercompositions_of_bidegree_two_two(self):
        assert len(sc.supercompositions(2, 2)) == 10

    def test_every_enumerated_index_is_canonical(self):
        for m in range(4):
            for I in sc.set_superpartitions(3, m):
                assert I.is_set_superpartition()
                assert I.is_standard()


class TestActions:
    def test_bar_sorts_with_sign(self):
        sign, K = sc.bar(idx("({0,2},{0,1})"))
        assert sign == -1
        assert str(K) == "({0,1},{0,2})"

    def test_trivial_index_has_no_canonical_term(self):
        assert sc.canonical_term(Supercomposition(((0,), (0,), (1,)))) is None

    @given(indices, st.data())
    def test_fermionic_reordering_sign(self, I, data):
        m = I.fermionic_degree
        sigma = data.draw(st.permutations(list(range(1, m + 1))))
        sign = -1 if sc.inversions(sigma) % 2 else 1
        assert sc.bar(sc.act_fermionic(tuple(sigma), I)) == (sign, I)

    def test_act_fermionic_composes(self):
        I = idx("({0},{0,1},{0,2},{3})")
        for a in permutations((1, 2, 3)):
            for b in permutations((1, 2, 3)):
                composed = tuple(a[b[i] - 1] for i in range(3))
                assert sc.act_fermionic(b, sc.act_fermionic(a, I)) == sc.act_fermionic(composed, I)

    def test_act_positions_relabels(self):
        K = sc.act_positions((2, 1), idx("({0,1},{2})"))
        assert str(K) == "({0,2},{1})"

    def test_shift(self):
        assert str(sc.shift(idx("({0,1},{2})"), 3)) == "({0,4},{5})"

    def test_standardize(self):
        K = Supercomposition(((0, 1), (0,), (2,)))
        assert sc.standardize(K) == ((1, 3), (2,), (4,))
        assert sc.standardize(idx("({0},{0,1,2})")) == ((1,), (2, 3, 4))

    def test_restrict(self):
        assert sc.restrict(idx("({0,1},{2},{3})"), {1, 3}) == ((0,), (2,))

    def test_over_product(self):
        assert str(sc.over_product(idx("({0,1})"), idx("({1})"))) == "({0,1},{2})"
        assert str(sc.over_product(idx("({1})"), idx("({0,1})"))) == "({0,2},{1})"

    def test_convex_form(self):
        I = idx("({0,2},{1,3})")
        assert not sc.is_convex(I)
        delta, J = sc.convex_form(I)
        assert sc.is_convex(J)
        assert sc.act_positions(delta, J) == I


class TestOrders:
    def test_bottom_is_below_everything(self):
        bottom = sc.zero(2, 2)
        assert sc.is_strongly_coarser(bottom, idx("({0},{0,1,2})"))

    def test_strong_and_weak_coarsening_differ(self):
        I, J = idx("({0},{0,1},{2})"), idx("({0,1},{0,2})")
        assert not sc.is_strongly_coarser(I, J)
        assert sc.is_coarser(I, J)
        assert sc.is_strongly_coarser(sc.act_fermionic((2, 1), I), J)

    def test_coarsening_cannot_merge_fermionic_blocks(self):
        assert sc.is_coarser(idx("({0},{1},{2})"), idx("({0,1,2})"))
        assert not sc.is_coarser(idx("({0,1},{0,2})"), Supercomposition(((0, 1, 2),)))

    @given(indices)
    def test_reflexive(self, K):
        assert sc.is_strongly_coarser(K, K)
        assert sc.is_coarser(K, K)

    def test_sigma_permutation(self):
        I = idx("({0},{0,3},{0,5},{1},{2,4})")
        J = idx("({0,1,5},{0,2,4},{0,3})")
        assert sc.sigma_perm(I, J) == (2, 3, 1)
        assert sc.inv(I, J) == 2

    def test_meet_of_crossed_fermionic_blocks(self):
        K, L = idx("({0,1},{0,2})"), sc.act_fermionic((2, 1), idx("({0,1},{0,2})"))
        assert sc.meet(K, L) == sc.zero(2, 2)

    def test_meet_requires_equal_bidegree(self):
        with pytest.raises(BidegreeError):
            sc.meet(idx("({0,1})"), idx("({1})"))

    @given(indices)
    def test_meet_is_a_lower_bound(self, K):
        for L in sc.strong_coarsenings(K):
            for N in sc.strong_refinements(L):
                meet = sc.meet(N, K)
                assert sc.is_strongly_coarser(meet, N)
                assert sc.is_strongly_coarser(meet, K)

    @given(indices)
    def test_refinements_and_coarsenings_are_inverse(self, K):
        for L in sc.strong_coarsenings(K):
            assert K in sc.strong_refinements(L)

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5 - n)])
    def test_meet_is_the_greatest_lower_bound(self, n, m):
        elements = sc.supercompositions(n, m)
        for K in elements:
            below_K = set(sc.strong_refinements(K))
            for L in elements:
                meet = sc.meet(K, L)
                assert sc.is_strongly_coarser(meet, K)
                assert sc.is_strongly_coarser(meet, L)
                for N in below_K:
                    if sc.is_strongly_coarser(N, L):
                        assert sc.is_strongly_coarser(N, meet)

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5 - n)])
    def test_bar_is_monotone(self, n, m):
        for L in sc.supercompositions(n, m):
            for K in sc.strong_refinements(L):
                if not K.is_trivial():
                    assert sc.is_coarser(sc.bar(K)[1], sc.bar(L)[1])

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5 - n)])
    def test_twisted_meet_factorial_is_symmetric(self, n, m):
        elements = sc.set_superpartitions(n, m)
        for sigma in permutations(range(1, m + 1)):
            inverse = tuple(sigma.index(i) + 1 for i in range(1, m + 1))
            for I in elements:
                for J in elements:
                    left = sc.meet(I, sc.act_fermionic(sigma, J))
                    right = sc.meet(J, sc.act_fermionic(inverse, I))
                    assert sc.factorial(left) == sc.factorial(right)


def _as_sets(partition):
    return frozenset(frozenset(block) for block in partition)


def _refines(finer, coarser):
    return all(any(block <= big for big in coarser) for block in finer)


class TestStandardization:
    @pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5 - n)])
    def test_injective_with_the_expected_image(self, n, m):
        elements = sc.supercompositions(n, m)
        image = {_as_sets(sc.standardize(K)) for K in elements}
        assert len(image) == len(elements)
        separated = {_as_sets(p) for p in sc.set_partitions(n + m)
                     if len({next(i for i, b in enumerate(p) if z in b) for z in range(1, m + 1)}) == m}
        assert image == separated

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5 - n)])
    def test_order_embedding(self, n, m):
        elements = sc.supercompositions(n, m)
        for K in elements:
            for L in elements:
                embedded = _refines(_as_sets(sc.standardize(K)), _as_sets(sc.standardize(L)))
                assert embedded == sc.is_strongly_coarser(K, L)

    @pytest.mark.parametrize("n, m", [(n, m) for n in range(5) for m in range(5 - n)])
    def test_image_is_convex(self, n, m):
        image = {_as_sets(sc.standardize(K)) for K in sc.supercompositions(n, m)}
        everything = [_as_sets(p) for p in sc.set_partitions(n + m)]
        for low in image:
            for high in image:
                if not _refines(low, high):
                    continue
                for middle in everything:
                    if _refines(low, middle) and _refines(middle, high):
                        assert middle in image


class TestMobius:
    def test_chain_example(self):
        bottom, top = sc.zero(2, 2), idx("({0},{0,1,2})")
        assert sc.mobius(bottom, top) == 2
        assert sc.mobius_zero(top) == 2
        assert sc.count_chains(bottom, top) == 4
        assert sc.mobius_by_chains(bottom, top) == 2

    def test_bottom_to_itself(self):
        assert sc.mobius_zero(sc.zero(3, 1)) == 1

    def test_incomparable_pair_is_zero(self):
        assert sc.mobius(idx("({0},{0,1},{2})"), idx("({0,1},{0,2})")) == 0

    @pytest.mark.parametrize("n, m", [(2, 0), (2, 1), (2, 2), (3, 1), (1, 2)])
    def test_closed_form_matches_recursion(self, n, m):
        for L in sc.supercompositions(n, m):
            for K in sc.strong_refinements(L):
                assert sc.mobius(K, L) == sc.mobius_recursive(K, L)

    @pytest.mark.parametrize("n, m", [(3, 0), (2, 1), (2, 2), (3, 1)])
    def test_absolute_values_sum_to_factorial(self, n, m):
        for L in sc.supercompositions(n, m):
            assert sum(abs(sc.mobius_zero(K)) for K in sc.strong_refinements(L)) == sc.factorial(L)

    @pytest.mark.parametrize("n, m", [(5, 0), (4, 1), (3, 2), (2, 3)])
    def test_three_formulas_agree_in_degree_five(self, n, m):
        bottom = sc.zero(n, m)
        for L in sc.set_superpartitions(n, m):
            closed = sc.mobius(bottom, L)
            assert closed == sc.mobius_zero(L)
            assert closed == sc.mobius_recursive(bottom, L)
            assert closed == sc.mobius_by_chains(bottom, L)

    def test_verify_covers_degree_five(self):
        labels = [label for label, _ in verify.check_mobius(5)]
        assert any(label.startswith("chains mu(0,") and "5" in label for label in labels)

    def test_factorial_counts_zero(self):
        assert sc.factorial(idx("({0,1},{2,3})")) == 4

    def test_sign(self):
        assert sc.sign(idx("({0,1,2})")) == 1
        assert sc.sign(idx("({0,1},{2})")) == -1


class TestTypes:
    def test_type_of_running_example(self):
        assert sc.lambda_of(idx("({0,1,7},{0,5},{2},{3,4},{6})")) == sp("(2,1;2,1,1)")

    def test_epsilon_counts_transpositions(self):
        I = idx("({0,2},{0,3,5},{1},{4},{6,7})")
        assert sc.lambda_of(I) == sp("(2,1;2,1,1)")
        assert sc.epsilon(I) == 1
        assert sc.epsilon_sign(I) == -1

    def test_equal_fermionic_sizes_have_no_type(self):
        I = idx("({0,1},{0,2})")
        assert sc.lambda_of(I) is None
        assert sc.epsilon_sign(I) == 0

    def test_set_partition_type(self):
        I = idx("({1,2},{3})")
        assert sc.lambda_of(I) == Superpartition((), (2, 1))
        assert sc.epsilon(I) == 0

    @pytest.mark.parametrize("text, count", [("(;2,1)", 3), ("(;1,1,1)", 1), ("(1,0;)", 1), ("(1;1)", 2)])
    def test_type_count(self, text, count):
        shape = sp(text)
        assert sc.type_count(shape) == count == shape.binomial()

    def test_type_count_matches_binomial_everywhere(self):
        for n in range(4):
            for m in range(n + 2):
                for shape in superpartitions(n, m):
                    assert sc.type_count(shape) == shape.binomial()

    @settings(max_examples=30)
    @given(indices)
    def test_type_has_matching_bidegree(self, I):
        shape = sc.lambda_of(I)
        if shape is not None:
            assert shape.bidegree == I.bidegree


class TestSuperpartition:
    def test_repeated_fermionic_part_rejected(self):
        with pytest.raises(InvalidIndexError):
            Superpartition.of((1, 1), ())

    def test_enumeration(self):
        assert [str(s) for s in superpartitions(2, 1)] == ["(2;)", "(1;1)", "(0;2)", "(0;1,1)"]
        assert [str(s) for s in superpartitions(1, 1)] == ["(1;)", "(0;1)"]
        assert superpartitions(0, 0) == [Superpartition((), ())]

    def test_partition_generators(self):
        assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(partitions(4, 2)) == [(4,), (3, 1), (2, 2)]
        assert list(partitions(0)) == [()]
        assert list(strict_partitions(3, 2)) == [(3, 0), (2, 1)]
        assert list(strict_partitions(3, 3)) == [(2, 1, 0)]
        assert list(strict_partitions(2, 3)) == []
        assert list(strict_partitions(1, 0)) == []
        assert list(strict_partitions(0, 0)) == [()]

    def test_diagrams(self):
        shape = sp("(3,1;2,1)")
        assert shape.plus() == (3, 2, 1, 1)
        assert shape.oplus() == (4, 2, 2, 1)
        assert Superpartition.from_diagrams(shape.oplus(), shape.plus()) == shape

    def test_conjugate(self):
        conjugate = sp("(3,1;2,1)").conjugate()
        assert conjugate.plus() == (4, 2, 1)
        assert conjugate.oplus() == (4, 3, 1, 1)
        assert conjugate == sp("(2,0;4,1)")

    def test_conjugation_is_an_involution(self):
        for n in range(5):
            for m in range(n + 2):
                for shape in superpartitions(n, m):
                    assert shape.conjugate().conjugate() == shape

    def test_factorials(self):
        shape = sp("(2,1;2,1,1)")
        assert shape.factorial() == 4
        assert shape.sym_multiplicity_factorial() == 2
        assert shape.binomial() == 630

    def test_string_forms(self):
        assert str(sp("(;1,1)")) == "(;1,1)"
        assert str(sp("(2,1;)")) == "(2,1;)"
        assert str(sp("(;)")) == "(;)"
