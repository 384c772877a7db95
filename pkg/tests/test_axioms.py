"""Tests for the cross-product axioms and the exact Krylov rank bound."""

import pytest

from src.algebra import DesignVector, check_cross_axioms, krylov_rank_at_most, norm_identity_sides
from src.algebra.axioms import find_norm_counterexample
from src.core import ModelRegistry


class TestCrossAxioms:
    """Tests for check_cross_axioms."""

    @pytest.mark.parametrize("name", ["quat3", "o1_7", "o2_7"])
    def test_cross_products(self, name):
        """Test the quaternion and octonion-type orientations satisfy all three axioms."""
        report = check_cross_axioms(ModelRegistry.get(name))
        assert report.bilinear
        assert report.orthogonal
        assert report.norm_identity
        assert report.is_cross_product
        assert report.counterexample is None
        assert report.monomials > 0

    def test_reversed_quaternion(self):
        """Test the reversed STS(3) orientation is also a cross product."""
        assert check_cross_axioms(ModelRegistry.get("quat3").reversed()).is_cross_product

    @pytest.mark.parametrize("name", ["o3_7", "o4_7", "zd7"])
    def test_norm_identity_fails(self, name):
        """Test the small classes break the norm identity with a witness."""
        o = ModelRegistry.get(name)
        report = check_cross_axioms(o)
        assert report.bilinear
        assert report.orthogonal
        assert not report.norm_identity
        assert not report.is_cross_product
        c = report.counterexample
        assert c is not None
        assert c.lhs != c.rhs
        assert norm_identity_sides(o, c.v, c.w) == (c.lhs, c.rhs)

    @pytest.mark.slow
    def test_nine_points(self):
        """Test no nine-point orientation is a cross product."""
        report = check_cross_axioms(ModelRegistry.get("o1_9"))
        assert report.orthogonal
        assert not report.norm_identity
        assert report.counterexample is not None


class TestNormIdentity:
    """Tests for the two sides of the norm identity."""

    def test_sides_agree_for_octonions(self, octonion7):
        """Test |v|^2 |w|^2 = |v x w|^2 + <v,w>^2 on a concrete pair."""
        v = DesignVector.parse("s1+2*s3-s6", 7)
        w = DesignVector.parse("s2-s4+s7", 7)
        lhs, rhs = norm_identity_sides(octonion7, v, w)
        assert lhs == rhs == 18

    def test_zero_divisor_breaks_identity(self, zd7):
        """Test a zero product of nonzero orthogonal vectors violates the identity."""
        lhs, rhs = norm_identity_sides(
            zd7, DesignVector.parse("s1+s5", 7), DesignVector.parse("s3+s7", 7)
        )
        assert lhs == 4
        assert rhs == 0

    def test_counterexample_is_two_term(self, zd7):
        """Test the search finds a two-term witness first."""
        c = find_norm_counterexample(zd7)
        assert c is not None
        assert sum(1 for x in c.v if x) == 2
        assert sum(1 for x in c.w if x) == 2

    def test_no_counterexample(self, octonion7):
        """Test nothing is found where the identity holds."""
        assert find_norm_counterexample(octonion7, tries=5) is None


class TestKrylovBound:
    """Tests for the exact rank bound on iterated products."""

    def test_trivial_bound(self):
        """Test bounds at least the column count hold trivially."""
        assert krylov_rank_at_most(ModelRegistry.get("o1_7"), 1, 2)

    def test_quaternion(self):
        """Test three columns in dimension three have rank at most 3."""
        assert krylov_rank_at_most(ModelRegistry.get("quat3"), 2, 3)

    def test_quaternion_rank_two(self):
        """Test [v, w x v] is generically independent."""
        assert not krylov_rank_at_most(ModelRegistry.get("quat3"), 1, 1)

    @pytest.mark.slow
    def test_low_growth_orientation(self):
        """Test rank <= 3 holds identically for the low-growth orientation."""
        assert krylov_rank_at_most(ModelRegistry.get("rg7a"), 3, 3)

    @pytest.mark.slow
    def test_full_growth_orientation(self):
        """Test the full-growth orientation exceeds rank 3 at k = 3."""
        assert not krylov_rank_at_most(ModelRegistry.get("rg7b"), 3, 3)
