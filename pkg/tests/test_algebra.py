"""Tests for the Steiner product, exact linear algebra and multiplication tables."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra import (
    DesignVector,
    SignedBasis,
    companion_matrix,
    in_span,
    inner_product,
    is_zero_divisor,
    kernel_basis,
    lift_automorphism,
    multiplication_table_check,
    orbit_of_vector,
    product_table,
    product_via_trace,
    rank_exact,
    right_companion_matrix,
    span_equal,
    span_rank,
    steiner_product,
)
from src.algebra.polynomial import Polynomial, generic_vectors, symbolic_dot, symbolic_product
from src.core import ModelRegistry
from src.core.errors import DesignSyntaxError, DimensionMismatch, ZeroVector
from src.groups import oriented_aut_group, sts_aut_group

coordinate = st.fractions(min_value=-6, max_value=6, max_denominator=6)


def vectors(n: int) -> st.SearchStrategy[DesignVector]:
    return st.lists(coordinate, min_size=n, max_size=n).map(DesignVector.of)


def s(text: str, n: int = 7) -> DesignVector:
    return DesignVector.parse(text, n)


class TestDesignVector:
    """Tests for DesignVector parsing and arithmetic."""

    def test_parse_symbolic(self):
        """Test sums of basis vectors with coefficients."""
        v = s("s1+2*s5-s7")
        assert v.coords == (1, 0, 0, 0, 2, 0, -1)

    def test_parse_coordinates(self):
        """Test whitespace-separated rational coordinates."""
        assert DesignVector.parse("1/2 0 -3", 3).coords == (Fraction(1, 2), 0, -3)

    def test_parse_zero(self):
        """Test 0 is the zero vector."""
        assert s("0").is_zero()

    def test_parse_errors(self):
        """Test bad literals and out-of-range indices."""
        with pytest.raises(DimensionMismatch):
            s("s8")
        with pytest.raises(DimensionMismatch):
            DesignVector.parse("1 2", 3)
        with pytest.raises(DesignSyntaxError):
            DesignVector.parse("1 x 2", 3)

    def test_parse_zero_denominator(self):
        """Test a zero denominator is a syntax error in both forms."""
        with pytest.raises(DesignSyntaxError):
            DesignVector.parse("1/0*s1", 3)
        with pytest.raises(DesignSyntaxError):
            DesignVector.parse("s2 - 3/0 s1", 3)
        with pytest.raises(DesignSyntaxError):
            DesignVector.parse("1/0 0 0", 3)

    def test_symbolic(self):
        """Test rendering as a signed sum."""
        v = DesignVector.of([1, 0, -1, 0, 0, 0, Fraction(1, 2)])
        assert v.symbolic() == "s1-s3+1/2*s7"
        assert DesignVector.zeros(3).symbolic() == "0"

    def test_basis_out_of_range(self):
        """Test s_i needs 1 <= i <= n."""
        with pytest.raises(DimensionMismatch):
            DesignVector.basis(3, 4)

    def test_inner_product(self):
        """Test the points form an orthonormal basis."""
        assert inner_product(s("s1+s2"), s("s2-s3")) == 1
        with pytest.raises(DimensionMismatch):
            inner_product(s("s1"), DesignVector.basis(3, 1))


class TestSteinerProduct:
    """Tests for the product on basis vectors and its bilinear extension."""

    def test_basis_product(self, octonion7):
        """Test s_i x s_j = f(i, j) s_k."""
        table = product_table(octonion7)
        assert table(1, 2) == SignedBasis(1, 3)
        assert table(2, 1) == SignedBasis(-1, 3)
        assert table(4, 4) == SignedBasis(0)
        assert str(table(2, 5)) == "-s7"

    def test_dimension_mismatch(self, octonion7):
        """Test vectors must have n coordinates."""
        with pytest.raises(DimensionMismatch):
            steiner_product(octonion7, s("s1"), DesignVector.basis(3, 1))

    @settings(max_examples=50, deadline=None)
    @given(a=vectors(7), b=vectors(7))
    def test_orthogonal_and_anticommutative(self, a, b):
        """Test a x b is orthogonal to both factors and b x a = -(a x b)."""
        o = ModelRegistry.get("o3_7")
        ab = steiner_product(o, a, b)
        assert inner_product(a, ab) == 0
        assert inner_product(b, ab) == 0
        assert steiner_product(o, b, a) == -ab

    @settings(max_examples=30, deadline=None)
    @given(a=vectors(9), b=vectors(9))
    def test_trace_form(self, a, b):
        """Test the trace expansion agrees with the bilinear product."""
        o = ModelRegistry.get("o5_9")
        assert product_via_trace(o, a, b) == steiner_product(o, a, b)

    @settings(max_examples=30, deadline=None)
    @given(a=vectors(7), b=vectors(7), c=vectors(7))
    def test_bilinear(self, a, b, c):
        """Test linearity in the first argument."""
        o = ModelRegistry.get("o2_7")
        expected = steiner_product(o, a, c) + 3 * steiner_product(o, b, c)
        assert steiner_product(o, a + 3 * b, c) == expected

    @settings(max_examples=20, deadline=None)
    @given(a=vectors(7), b=vectors(7))
    def test_equivariance(self, a, b):
        """Test automorphisms commute with the product."""
        o = ModelRegistry.get("o1_7")
        for g in oriented_aut_group(o, sts_aut_group(o.base)):
            lifted = steiner_product(o, lift_automorphism(g, a), lift_automorphism(g, b))
            assert lifted == lift_automorphism(g, steiner_product(o, a, b))


class TestCompanionMatrix:
    """Tests for left and right multiplication matrices."""

    @settings(max_examples=30, deadline=None)
    @given(w=vectors(7), v=vectors(7))
    def test_apply(self, w, v):
        """Test A_w v = w x v and the right companion gives v x w."""
        o = ModelRegistry.get("o4_7")
        assert companion_matrix(o, w).apply(v) == steiner_product(o, w, v)
        assert right_companion_matrix(o, w).apply(v) == steiner_product(o, v, w)

    def test_skew_symmetric(self, zd7):
        """Test A_w is skew-symmetric."""
        a = companion_matrix(zd7, s("s1+s5"))
        assert a.is_skew_symmetric()
        assert a.transpose() == right_companion_matrix(zd7, s("s1+s5"))

    def test_zero_divisor_formula(self, zd7):
        """Test the explicit coordinates of (s1 + s5) x v."""
        w = s("s1+s5")
        v = DesignVector.of(range(1, 8))
        expected = DesignVector.of(
            [-v[4], -v[3] + v[7], v[2] + v[6], v[1] - v[5], v[4], -v[3] + v[7], -v[2] - v[6]]
        )
        assert steiner_product(zd7, w, v) == expected

    def test_zero_product(self, zd7):
        """Test (s1 + s5) x (s3 + s7) = 0."""
        assert steiner_product(zd7, s("s1+s5"), s("s3+s7")).is_zero()

    def test_render_grid(self):
        """Test the grid has one line per row."""
        a = companion_matrix(ModelRegistry.get("quat3"), DesignVector.basis(3, 1))
        lines = a.render_grid().splitlines()
        assert len(lines) == 3
        assert lines[2].split() == ["0", "1", "0"]


class TestZeroDivisor:
    """Tests for zero-divisor detection."""

    def test_zd7(self, zd7):
        """Test s1 + s5 has rank 4 and a witness in the kernel."""
        result = is_zero_divisor(zd7, s("s1+s5"))
        assert result.is_zero_divisor
        assert result.rank == 4
        assert steiner_product(zd7, s("s1+s5"), result.witness).is_zero()
        assert span_rank([s("s1+s5"), result.witness]) == 2

    def test_kernel(self, zd7):
        """Test ker A_{s1+s5} = span{s1+s5, s2-s6, s3+s7}."""
        kernel = companion_matrix(zd7, s("s1+s5")).kernel()
        assert span_equal(kernel, [s("s1+s5"), s("s2-s6"), s("s3+s7")])

    def test_octonion_has_none(self, octonion7):
        """Test basis sums are not zero-divisors for the octonion product."""
        for text in ("s1", "s1+s5", "s1+s2+s4"):
            result = is_zero_divisor(octonion7, s(text))
            assert not result.is_zero_divisor
            assert result.rank == 6
            assert result.witness is None

    def test_zero_vector(self, zd7):
        """Test the zero vector is rejected."""
        with pytest.raises(ZeroVector):
            is_zero_divisor(zd7, s("0"))

    def test_orbit(self, zd7):
        """Test the orbit of s1 + s5 under Aut(zd7)."""
        aut = oriented_aut_group(zd7, sts_aut_group(zd7.base))
        orbit = set(orbit_of_vector(aut, s("s1+s5")))
        assert orbit == {s("s1+s5"), s("s1+s3"), s("s1+s6")}
        assert all(is_zero_divisor(zd7, x).rank == 4 for x in orbit)

    def test_nine_point_kernel(self):
        """Test rank and kernel of A_{s1+s2+s3} on the He3 class."""
        o = ModelRegistry.get("o1_9")
        w = DesignVector.parse("s1+s2+s3", 9)
        a = companion_matrix(o, w)
        assert a.rank() == 4
        expected = [DesignVector.parse(x, 9) for x in ("s4-s5", "s4-s6", "s7-s8", "s7-s9")]
        assert span_equal(a.kernel(), [*expected, w])


class TestLinalg:
    """Tests for exact rank and kernels."""

    def test_rank(self):
        """Test rank over the rationals."""
        assert rank_exact([[1, 2], [2, 4]]) == 1
        assert rank_exact([[Fraction(1, 2), 1], [1, Fraction(1, 3)]]) == 2
        assert rank_exact([]) == 0
        assert rank_exact([[0, 0], [0, 0]]) == 0

    def test_kernel_normalized(self):
        """Test kernel vectors are primitive with a positive leading entry."""
        basis = kernel_basis([[1, 1, 0]])
        assert [v.coords for v in basis] == [(1, -1, 0), (0, 0, 1)]

    def test_kernel_of_empty(self):
        """Test an empty matrix has the whole space as kernel."""
        assert len(kernel_basis([], ncols=3)) == 3

    def test_in_span(self):
        """Test span membership."""
        assert in_span(s("s1+s2"), [s("s1"), s("s2")])
        assert not in_span(s("s3"), [s("s1"), s("s2")])
        assert in_span(s("0"), [])

    @settings(max_examples=30, deadline=None)
    @given(rows=st.lists(st.lists(coordinate, min_size=5, max_size=5), min_size=1, max_size=6))
    def test_rank_nullity(self, rows):
        """Test rank plus kernel dimension is the column count."""
        assert rank_exact(rows) + len(kernel_basis(rows)) == 5


class TestPolynomial:
    """Tests for the sparse polynomial helpers."""

    def test_arithmetic(self):
        """Test (x + y)(x - y) = x^2 - y^2."""
        x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
        p = (x + y) * (x - y)
        assert len(p) == 2
        assert p.evaluate([3, 2]) == 5
        assert (p - p).is_zero()

    def test_symbolic_orthogonality(self, octonion7):
        """Test <v, v x w> vanishes identically."""
        v, w = generic_vectors(7)
        assert symbolic_dot(v, symbolic_product(octonion7, v, w)).is_zero()


class TestMultiplicationTables:
    """Tests for the quaternion and octonion tables."""

    def test_octonion(self, octonion7):
        """Test o1_7 reproduces the imaginary octonion product."""
        assert multiplication_table_check(octonion7, "octonion")

    def test_quaternion(self):
        """Test quat3 reproduces the imaginary quaternion product."""
        assert multiplication_table_check(ModelRegistry.get("quat3"), "quaternion")

    def test_other_orientations_differ(self):
        """Test the reversed and other orientations do not match."""
        assert not multiplication_table_check(ModelRegistry.get("quat3").reversed(), "quaternion")
        assert not multiplication_table_check(ModelRegistry.get("o2_7"), "octonion")

    def test_wrong_size(self, octonion7):
        """Test the table size must match n."""
        with pytest.raises(DimensionMismatch):
            multiplication_table_check(octonion7, "quaternion")
