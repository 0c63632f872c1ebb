"""Tests for the symbolic algebra: bases, conversions, products, omega, pairing."""

import pytest
from hypothesis import given, settings
from sympy.polys.domains import QQ

from sncsym import algebra
from sncsym import combinat as sc
from sncsym import oracle
from sncsym import verify
from sncsym.algebra import SymbolicElement
from sncsym.bases import Basis
from sncsym.combinat import Supercomposition
from sncsym.errors import BasisError, BidegreeError

from conftest import classical, el, idx, indices, sp

HALF = QQ(1, 2)


def terms(element):
    return {str(index): coeff for index, coeff in element.items()}


class TestElement:
    def test_zero_coefficients_dropped(self):
        f = el(Basis.M, "({0},{1})") - el(Basis.M, "({0},{1})")
        assert f.is_zero()
        assert str(f) == "0"

    def test_noncanonical_index_folds_with_sign(self):
        f = SymbolicElement.of(Basis.M, Supercomposition(((0, 2), (0, 1))))
        assert terms(f) == {"({0,1},{0,2})": -1}

    def test_trivial_index_is_zero(self):
        assert SymbolicElement.of(Basis.H, Supercomposition(((0,), (0,), (1,)))).is_zero()

    def test_schur_tag_not_storable(self):
        with pytest.raises(BasisError):
            SymbolicElement(Basis.SCHUR)

    def test_rendering(self):
        f = el(Basis.M, "({0},{0,1},{2})", QQ(3, 2)) - el(Basis.M, "({0,1},{0,2})")
        assert str(f) == "3/2*m[({0},{0,1},{2})] - m[({0,1},{0,2})]"

    def test_equality_across_bases(self, running_example):
        m_I = SymbolicElement.of(Basis.M, running_example)
        assert algebra.convert(m_I, Basis.E) == m_I

    def test_scalar_multiplication(self):
        f = el(Basis.P, "({0,1})")
        assert 2 * f == f.scale(2) == f * 2


class TestConversions:
    def test_monomial_in_power_sums(self, running_example):
        result = algebra.convert(SymbolicElement.of(Basis.M, running_example), Basis.P)
        assert terms(result) == {
            "({0},{0,1},{2})": 1,
            "({0},{0,1,2})": -1,
            "({0,1},{0,2})": 1,
        }

    def test_monomial_in_elementary(self, running_example):
        result = algebra.convert(SymbolicElement.of(Basis.M, running_example), Basis.E)
        assert terms(result) == {
            "({0},{0,1},{2})": HALF,
            "({0},{0,2},{1})": -HALF,
            "({0},{0,1,2})": -HALF,
            "({0,1},{0,2})": 1,
        }

    def test_monomial_in_complete(self, running_example):
        result = algebra.convert(SymbolicElement.of(Basis.M, running_example), Basis.H)
        assert terms(result) == {
            "({0},{0,1},{2})": QQ(5, 2),
            "({0},{0,2},{1})": -HALF,
            "({0},{0,1,2})": -HALF,
            "({0,1},{0,2})": 1,
        }

    def test_power_sum_in_monomials(self, running_example):
        result = algebra.to_monomial(SymbolicElement.of(Basis.P, running_example))
        assert terms(result) == {
            "({0},{0,1},{2})": 1,
            "({0},{0,1,2})": 1,
            "({0,1},{0,2})": -1,
        }

    def test_elementary_in_monomials(self):
        result = algebra.to_monomial(el(Basis.E, "({0},{0,2},{1,3})"))
        assert terms(result) == {
            "({0,1,2},{0,3})": 1,
            "({0},{0,1,2},{3})": -1,
            "({0,1},{0,2,3})": -1,
            "({0},{0,2,3},{1})": -1,
            "({0},{0,2},{1},{3})": -1,
            "({0,1},{0,2},{3})": -1,
            "({0,2},{0,3},{1})": 1,
        }

    def test_complete_in_monomials(self):
        result = terms(algebra.to_monomial(el(Basis.H, "({0},{0,2},{1,3})")))
        assert len(result) == 10
        assert result["({0},{0,1,2,3})"] == 2
        assert result["({0,1,2},{0,3})"] == -1
        assert result["({0,1,3},{0,2})"] == 2

    def test_complete_in_power_sums_is_nonnegative(self):
        # at most one fermionic block, so no reordering signs
        for I in sc.set_superpartitions(3, 0) + sc.set_superpartitions(3, 1):
            result = algebra.convert(SymbolicElement.of(Basis.H, I), Basis.P)
            assert all(c > 0 for _, c in result.items())

    @settings(max_examples=40, deadline=None)
    @given(indices, classical, classical)
    def test_round_trip(self, I, source, target):
        f = SymbolicElement.of(source, I)
        back = algebra.convert(algebra.convert(f, target), source)
        assert back.basis == source
        assert back.terms == f.terms

    def test_direct_routes_agree_with_monomial_route(self):
        result = verify.run_check(_check("direct-routes"), 3)
        assert result.passed, result.counterexample

    def test_unknown_direct_route(self, running_example):
        with pytest.raises(BasisError):
            algebra.convert_direct(SymbolicElement.of(Basis.M, running_example), Basis.P)

    @pytest.mark.parametrize("basis", [Basis.P, Basis.E, Basis.H])
    @pytest.mark.parametrize("n, m", [(2, 0), (2, 1), (2, 2), (3, 1), (1, 2)])
    def test_transition_matrices_are_inverse(self, basis, n, m):
        forward = algebra.transition_matrix(Basis.M, basis, n, m)
        backward = algebra.transition_matrix(basis, Basis.M, n, m)
        size = len(sc.set_superpartitions(n, m))
        assert forward.shape == (size, size)
        identity = [[QQ.one if i == j else QQ.zero for j in range(size)] for i in range(size)]
        assert algebra.matrix_entries(forward * backward) == identity
        assert algebra.matrix_entries(algebra.inverse_matrix(forward)) == algebra.matrix_entries(backward)

    def test_matrix_columns_follow_enumeration(self, running_example):
        indices = sc.set_superpartitions(2, 2)
        entries = algebra.matrix_entries(algebra.transition_matrix(Basis.M, Basis.P, 2, 2))
        column = indices.index(running_example)
        expected = algebra.convert(SymbolicElement.of(Basis.M, running_example), Basis.P)
        assert [entries[i][column] for i in range(len(indices))] == [
            expected.coefficient(J) for J in indices]


def _check(name):
    return next(c for c in verify.CHECKS if c.name == name)


class TestProducts:
    def test_shuffle_set(self):
        found = algebra.shuffle_set(idx("({0},{0,3},{1,2})"), idx("({0,2},{1})"))
        assert len(found) == 7
        assert len(set(found)) == 7
        assert all(not K.is_trivial() for K in found)

    def test_shuffle_multiplicities_match_expansion(self):
        I, J = idx("({0},{0,3},{1,2})"), idx("({0,2},{1})")
        f = el(Basis.M, "({0},{0,3},{1,2})") * el(Basis.M, "({0,2},{1})")
        folded = [sc.canonical_term(K) for K in algebra.shuffle_set(I, J)]
        support = {K for _, K in folded}
        assert set(f.terms) <= support
        expanded = oracle.expand_basis(Basis.M, I, 5) * oracle.expand_basis(Basis.M, J, 5)
        assert oracle.expand_element(f, 5) == expanded
        for K in support:
            coeff = f.coefficient(K)
            assert coeff == sum(sign for sign, L in folded if L == K)
            assert expanded.coefficient(oracle.standard_word(K)) == coeff

    def test_square_of_fermionic_monomial(self):
        f = el(Basis.M, "({0},{1})")
        assert terms(f * f) == {
            "({0},{0,1},{2})": 1,
            "({0},{0,2},{1})": -1,
            "({0,1},{0,2})": -1,
        }

    def test_power_sums_concatenate(self):
        assert terms(el(Basis.P, "({0,1})") * el(Basis.P, "({1})")) == {"({0,1},{2})": 1}
        assert terms(el(Basis.P, "({1})") * el(Basis.P, "({0,1})")) == {"({0,2},{1})": 1}

    def test_fermionic_factors_anticommute(self):
        f, g = el(Basis.E, "({0,1})"), el(Basis.E, "({0})")
        assert terms(f * g) == {"({0},{0,1})": -1}
        assert f * g == -(g * f)

    def test_repeated_zero_block_vanishes(self):
        f = el(Basis.H, "({0})")
        assert (f * f).is_zero()

    def test_products_match_brute_force(self):
        result = verify.run_check(_check("products"), 3)
        assert result.passed, result.counterexample

    def test_mixed_bases_use_left_basis(self):
        f, g = el(Basis.P, "({0,1})"), el(Basis.M, "({1})")
        assert (f * g).basis == Basis.P


class TestOmega:
    def test_power_sum_sign(self):
        assert algebra.omega(el(Basis.P, "({0,1,2})")) == el(Basis.P, "({0,1,2})")
        assert algebra.omega(el(Basis.P, "({0,1},{2})")) == el(Basis.P, "({0,1},{2})", -1)

    def test_swaps_elementary_and_complete(self):
        e_I = el(Basis.E, "({0},{0,2},{1,3})")
        h_I = el(Basis.H, "({0},{0,2},{1,3})")
        assert algebra.to_monomial(algebra.omega(e_I)) == algebra.to_monomial(h_I)

    @settings(max_examples=30, deadline=None)
    @given(indices, classical)
    def test_involution(self, I, basis):
        f = SymbolicElement.of(basis, I)
        assert algebra.omega(algebra.omega(f)) == f

    def test_multiplicative(self):
        f, g = el(Basis.E, "({0,1})"), el(Basis.M, "({0},{1})")
        assert algebra.omega(f * g) == algebra.omega(f) * algebra.omega(g)


class TestInnerProduct:
    @pytest.mark.parametrize("n, m, value", [(2, 0, 2), (2, 1, 2), (2, 2, -2), (1, 3, -1), (3, 4, 6)])
    def test_pairing_scale(self, n, m, value):
        assert algebra.pairing_scale(n, m) == value

    @pytest.mark.parametrize("n, m", [(2, 1), (2, 2), (3, 1)])
    def test_monomials_and_completes_are_dual(self, n, m):
        indices = sc.set_superpartitions(n, m)
        scale = algebra.pairing_scale(n, m)
        for I in indices:
            for J in indices:
                value = algebra.inner_product(SymbolicElement.of(Basis.M, I), SymbolicElement.of(Basis.H, J))
                assert value == (scale if I == J else 0)

    def test_identities(self):
        result = verify.run_check(_check("inner-products"), 3)
        assert result.passed, result.counterexample

    def test_power_sum_norm(self, running_example):
        p_I = SymbolicElement.of(Basis.P, running_example)
        assert algebra.inner_product(p_I, p_I) == QQ(-2, 1)

    def test_different_bidegrees_pair_to_zero(self):
        assert algebra.inner_product(el(Basis.M, "({0,1})"), el(Basis.H, "({1})")) == 0

    def test_homogeneity_check(self):
        with pytest.raises(BidegreeError):
            algebra.check_homogeneous(el(Basis.M, "({0,1})") + el(Basis.M, "({1})"))


class TestTypeSums:
    def test_signed_type_sum(self):
        total = algebra.signed_type_sum(Basis.H, sp("(1,0;)"))
        assert terms(total) == {"({0},{0,1})": -1}

    def test_monomial_type_sum_scales_by_factorial(self):
        total = algebra.monomial_type_sum(sp("(2;)"))
        assert terms(total) == {"({0,1,2})": 2}

    def test_basis_elements(self):
        assert len(list(algebra.basis_elements(Basis.E, 2, 2))) == 4
