"""Tests for permutations, automorphism groups and group profiles."""

import pytest

from src.core import ModelRegistry
from src.core.errors import DegreeMismatch, DegreeTooLarge, NotSubgroup
from src.groups import (
    Permutation,
    apply,
    are_conjugate_subgroups,
    are_isomorphic,
    generate_group,
    is_reflexive,
    oriented_aut_group,
    profile_group,
    reverse_orientation,
    sts_aut_group,
)
from src.groups.profile import catalog_name


class TestPermutation:
    """Tests for Permutation."""

    def test_parse_and_notation(self):
        """Test cycle notation parses and prints back."""
        p = Permutation.parse("(2,4,6)(3,5,7)", 7)
        assert p(2) == 4
        assert p(6) == 2
        assert p(1) == 1
        assert p.cycle_notation() == "(2,4,6)(3,5,7)"

    def test_parse_compact(self):
        """Test single-digit cycles without commas."""
        assert Permutation.parse("(274)(365)", 7) == Permutation.parse("(2,7,4)(3,6,5)", 7)

    def test_identity(self):
        """Test the empty cycle is the identity."""
        e = Permutation.parse("()", 5)
        assert e.is_identity
        assert e.cycle_notation() == "()"
        assert e.order() == 1

    def test_compose(self):
        """Test (p * q)(x) = p(q(x))."""
        p = Permutation.parse("(1,2)", 3)
        q = Permutation.parse("(2,3)", 3)
        assert (p * q)(2) == p(q(2)) == 3

    def test_inverse_and_order(self):
        """Test inverse and element order."""
        p = Permutation.parse("(1,2,4,3,6,7,5)", 7)
        assert (p * p.inverse()).is_identity
        assert p.order() == 7
        assert Permutation.parse("(1,2)(3,4,5)", 5).order() == 6

    def test_degree_mismatch(self):
        """Test cycles must fit the degree."""
        with pytest.raises(DegreeMismatch):
            Permutation.parse("(1,8)", 7)

    def test_matrix_is_permutation(self):
        """Test the permutation matrix sends e_i to e_phi(i)."""
        p = Permutation.parse("(1,2,3)", 3)
        m = p.matrix()
        assert m[1][0] == 1
        assert sum(map(sum, m)) == 3


class TestGenerateGroup:
    """Tests for group closure."""

    def test_cyclic(self):
        """Test a 3-cycle generates a group of order 3."""
        g = generate_group(7, [Permutation.parse("(2,4,6)(3,5,7)", 7)])
        assert g.order == 3

    def test_fano_generators(self, aut7):
        """Test the printed generators give Aut(STS(7))."""
        gens = [Permutation.parse(x, 7) for x in ("(1,2,4,3,6,7,5)", "(4,5)(6,7)")]
        assert generate_group(7, gens).element_set() == aut7.element_set()

    @pytest.mark.slow
    def test_affine_generators(self, aut9):
        """Test the printed generators give Aut(STS(9))."""
        gens = [Permutation.parse(x, 9) for x in ("(2,6,4,9,3,8,7,5)", "(1,3,2)(4,7,5,8,6,9)")]
        assert generate_group(9, gens).element_set() == aut9.element_set()

    def test_empty_generators(self):
        """Test no generators give the trivial group."""
        assert generate_group(4, []).order == 1


class TestAutomorphisms:
    """Tests for automorphism groups of plain and oriented systems."""

    def test_sts3(self, sts3):
        """Test Aut(STS(3)) is S3."""
        g = sts_aut_group(sts3)
        assert g.order == 6
        assert profile_group(g).catalog_name == "S3"

    def test_fano(self, aut7):
        """Test |Aut(STS(7))| = 168."""
        assert aut7.order == 168

    @pytest.mark.slow
    def test_affine(self, aut9):
        """Test |Aut(STS(9))| = 432."""
        assert aut9.order == 432

    def test_backtracking_matches_exhaustive(self, sts7, aut7):
        """Test the backtracking search finds the same group."""
        g = sts_aut_group(sts7, exhaustive_degree=0)
        assert g.element_set() == aut7.element_set()

    def test_degree_too_large(self, sts7):
        """Test disabling backtracking above the exhaustive cap."""
        with pytest.raises(DegreeTooLarge):
            sts_aut_group(sts7, exhaustive_degree=3, backtracking=False)

    def test_oriented_octonion(self, octonion7, aut7):
        """Test the octonion orientation has automorphism group C7:C3."""
        g = oriented_aut_group(octonion7, aut7)
        assert g.order == 21
        assert profile_group(g).catalog_name == "C7:C3"
        assert g.is_subgroup_of(aut7)

    def test_printed_generators(self, aut7):
        """Test printed generators of the oriented seven-point groups."""
        cases = {
            "o1_7": ["(2,4,6)(3,5,7)", "(1,2,3)(4,7,6)"],
            "o2_7": ["(2,4,7)(3,5,6)", "(1,2,3)(5,6,7)"],
            "o3_7": ["(2,4,6)(3,5,7)"],
            "o4_7": ["(1,7,6)(3,5,4)"],
        }
        for name, gens in cases.items():
            o = ModelRegistry.get(name)
            expected = generate_group(7, [Permutation.parse(x, 7) for x in gens])
            assert oriented_aut_group(o, aut7).element_set() == expected.element_set(), name

    def test_zero_divisor_orientation(self, zd7, aut7):
        """Test Aut(zd7) = {id, (2,7,4)(3,6,5), (2,4,7)(3,5,6)}."""
        g = oriented_aut_group(zd7, aut7)
        assert {x.cycle_notation() for x in g} == {"()", "(2,7,4)(3,6,5)", "(2,4,7)(3,5,6)"}

    def test_apply_identity(self, octonion7):
        """Test the identity fixes every orientation."""
        assert apply(Permutation.identity(7), octonion7) == octonion7

    def test_apply_reorients(self, octonion7):
        """Test apply maps cycles pointwise."""
        phi = Permutation.parse("(1,2)", 7)
        moved = apply(phi, octonion7)
        assert moved.f(2, 1) == octonion7.f(1, 2)

    def test_oriented_degree_mismatch(self, octonion7, sts3):
        """Test the base group must act on the same points."""
        with pytest.raises(DegreeMismatch):
            oriented_aut_group(octonion7, sts_aut_group(sts3))


class TestIsomorphism:
    """Tests for are_isomorphic and reflexivity."""

    def test_witness(self, octonion7, aut7):
        """Test the witness maps one system onto the other."""
        target = apply(Permutation.parse("(1,5,3)(2,7)", 7), octonion7)
        phi = are_isomorphic(octonion7, target, aut7)
        assert phi is not None
        assert apply(phi, octonion7) == target

    def test_not_isomorphic(self, aut7):
        """Test classes with different automorphism orders are distinct."""
        assert are_isomorphic(ModelRegistry.get("o1_7"), ModelRegistry.get("o3_7"), aut7) is None

    def test_different_bases(self, octonion7):
        """Test isomorphism across relabelled base systems."""
        phi = Permutation.parse("(1,7)(2,6)", 7)
        relabelled = apply(phi, octonion7)
        assert relabelled.base != octonion7.base
        witness = are_isomorphic(octonion7, relabelled)
        assert witness is not None
        assert apply(witness, octonion7) == relabelled

    def test_fano_orientations_not_reflexive(self, aut7):
        """Test no seven-point class is isomorphic to its reversal."""
        for name in ("o1_7", "o2_7", "o3_7", "o4_7"):
            assert not is_reflexive(ModelRegistry.get(name), aut7)

    def test_nine_point_order_three_reflexive(self):
        """Test o5_9 has an order-3 automorphism and a reversing isomorphism."""
        o = ModelRegistry.get("o5_9")
        assert apply(Permutation.parse("(4,6,5)(7,8,9)", 9), o) == o
        assert apply(Permutation.parse("(1,2)(4,8)(5,7)(6,9)", 9), o) == o.reversed()

    def test_nine_point_listings_distinct(self):
        """Test no two nine-point representatives share a listing."""
        names = [f"o{k}_9" for k in range(1, 17)]
        listings = {str(ModelRegistry.get(name)) for name in names}
        assert len(listings) == len(names)

    def test_quaternion_reflexive(self):
        """Test both orientations of STS(3) are isomorphic."""
        assert is_reflexive(ModelRegistry.get("quat3"))

    def test_reverse_orientation(self, octonion7):
        """Test reverse_orientation reverses every cycle."""
        assert reverse_orientation(octonion7) == octonion7.reversed()

    def test_odd_order_and_reversal(self, aut7):
        """Test Aut(o) = Aut(reverse(o)) and has odd order."""
        for name in ("o1_7", "o2_7", "o3_7", "o4_7", "zd7"):
            o = ModelRegistry.get(name)
            g = oriented_aut_group(o, aut7)
            assert g.order % 2 == 1
            assert g.element_set() == oriented_aut_group(o.reversed(), aut7).element_set()


class TestProfile:
    """Tests for group fingerprints and conjugacy."""

    def test_catalog(self):
        """Test catalog names from fingerprints."""
        assert catalog_name(27, False, 3, False) == "He3"
        assert catalog_name(9, True, 3, False) == "C3xC3"
        assert catalog_name(9, True, 9, True) == "C9"
        assert catalog_name(21, False, 21, False) == "C7:C3"
        assert catalog_name(12, True, 6, False) == "unknown(12,abelian,6)"

    def test_large_groups(self, aut7):
        """Test the full Fano group profile."""
        profile = profile_group(aut7)
        assert profile.order == 168
        assert not profile.is_abelian
        assert profile.catalog_name == "order-168 (GL(3,F2))"

    def test_conjugate_subgroups(self, aut7):
        """Test the two order-21 groups are conjugate in Aut(STS(7))."""
        h = oriented_aut_group(ModelRegistry.get("o1_7"), aut7)
        k = oriented_aut_group(ModelRegistry.get("o2_7"), aut7)
        x = are_conjugate_subgroups(h, k, aut7)
        assert x is not None

    def test_not_subgroup(self, aut7):
        """Test subgroups must live in the ambient group."""
        other = generate_group(7, [Permutation.parse("(1,2)", 7)])
        h = oriented_aut_group(ModelRegistry.get("o1_7"), aut7)
        with pytest.raises(NotSubgroup):
            are_conjugate_subgroups(other, h, aut7)
