"""
Unit tests for q-linearized polynomials

Tests ring laws, symbolic division on both sides, evaluation, Moore matrices,
annihilator and Lagrange polynomials and root spaces.
"""

import pytest
import random
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from gabidulin import gflinalg
from gabidulin.counters import OpCounter, counting
from gabidulin.errors import DependentElementsError, ZeroPolynomialDivisionError
from gabidulin.field import field_new
from gabidulin.linpoly import (
    NEG_INF,
    LinPoly,
    annihilator,
    annihilator_and_lagrange,
    lagrange,
    moore,
    root_space,
)


def random_poly(field, rng, max_qdeg):
    return LinPoly(field, [rng.randrange(field.order) for _ in range(rng.randint(0, max_qdeg + 1))])


def random_nonzero_poly(field, rng, max_qdeg):
    while True:
        f = random_poly(field, rng, max_qdeg)
        if not f.is_zero():
            return f


@pytest.fixture
def gf8():
    return field_new(2, 3)


@pytest.fixture
def gf16():
    return field_new(2, 4)


class TestLinPolyBasics:
    """Test suite for construction and degree bookkeeping."""

    def test_trailing_zeros_trimmed(self, gf8):
        """Trailing zero coefficients do not count toward the q-degree."""
        f = LinPoly(gf8, [3, 0, 5, 0, 0])
        assert f.coeffs == (3, 0, 5)
        assert f.qdeg == 2
        assert f.lead == 5

    def test_zero_polynomial(self, gf8):
        """The zero polynomial has q-degree minus infinity."""
        zero = LinPoly.zero(gf8)
        assert zero.is_zero()
        assert zero.qdeg == NEG_INF
        assert zero.qdeg < 0

    def test_monomial_and_identity(self, gf8):
        """x^[2] and x are monic."""
        assert LinPoly.monomial(gf8, 2).coeffs == (0, 0, 1)
        assert LinPoly.identity(gf8).is_monic()
        assert not LinPoly(gf8, [0, 3]).is_monic()

    def test_text_form(self, gf8):
        """index:element text round trips."""
        f = LinPoly.from_text(gf8, "0:5 2:3")
        assert f.coeffs == (5, 0, 3)
        assert f.to_text() == "0:5 2:3"
        assert LinPoly.from_text(gf8, "").is_zero()

    def test_text_form_rejects_garbage(self, gf8):
        """Malformed terms raise ValueError."""
        with pytest.raises(ValueError):
            LinPoly.from_text(gf8, "2-3")
        with pytest.raises(ValueError):
            LinPoly.from_text(gf8, "0:9")

    def test_immutable(self, gf8):
        """Attributes cannot be reassigned."""
        f = LinPoly(gf8, [1])
        with pytest.raises(AttributeError):
            f.coeffs = (2,)

    def test_padded(self, gf8):
        """Padding extends with zeros."""
        assert LinPoly(gf8, [4]).padded(3) == [4, 0, 0]


class TestLinPolyRing:
    """Test suite for addition, composition and evaluation."""

    def test_composition_not_commutative(self, gf8):
        """x^[1] o (alpha x) = alpha^2 x^[1] but (alpha x) o x^[1] = alpha x^[1]."""
        frob = LinPoly.monomial(gf8, 1)
        scale = LinPoly(gf8, [2])
        assert frob.compose(scale).coeffs == (0, 4)
        assert scale.compose(frob).coeffs == (0, 2)

    def test_identity_is_neutral(self, gf16):
        """x o f = f o x = f."""
        rng = random.Random(1)
        identity = LinPoly.identity(gf16)
        for _ in range(50):
            f = random_poly(gf16, rng, 4)
            assert identity.compose(f) == f
            assert f.compose(identity) == f

    def test_ring_laws(self, gf16):
        """Associativity of composition and both distributive laws on random triples."""
        rng = random.Random(2024)
        for _ in range(1000):
            f, g, h = (random_poly(gf16, rng, 3) for _ in range(3))
            assert f.compose(g.compose(h)) == f.compose(g).compose(h)
            assert f.compose(g + h) == f.compose(g) + f.compose(h)
            assert (f + g).compose(h) == f.compose(h) + g.compose(h)

    def test_ring_laws_odd_characteristic(self):
        """The same laws over GF(27)."""
        field = field_new(3, 3)
        rng = random.Random(5)
        for _ in range(200):
            f, g, h = (random_poly(field, rng, 2) for _ in range(3))
            assert f.compose(g.compose(h)) == f.compose(g).compose(h)
            assert f.compose(g - h) == f.compose(g) - f.compose(h)
            assert (f - f).is_zero()
            assert f + (-f) == LinPoly.zero(field)

    def test_qdeg_adds_under_composition(self, gf16):
        """No zero divisors: q-degrees add."""
        rng = random.Random(3)
        for _ in range(100):
            f = random_nonzero_poly(gf16, rng, 3)
            g = random_nonzero_poly(gf16, rng, 3)
            assert f.compose(g).qdeg == f.qdeg + g.qdeg

    def test_evaluation_of_composition_exhaustive(self):
        """(f o g)(a) = f(g(a)) for every a in GF(2^9)."""
        field = field_new(2, 9)
        rng = random.Random(11)
        for _ in range(3):
            f = random_poly(field, rng, 4)
            g = random_poly(field, rng, 4)
            fg = f.compose(g)
            for a in field.elements():
                assert fg(a) == f(g(a))

    def test_evaluation_is_linear(self, gf16):
        """f(a + b) = f(a) + f(b)."""
        rng = random.Random(4)
        f = random_poly(gf16, rng, 3)
        for a in gf16.elements():
            for b in gf16.elements():
                assert f(gf16.add(a, b)) == gf16.add(f(a), f(b))

    def test_scale_is_left_composition(self, gf16):
        """c * f = (c x) o f."""
        rng = random.Random(6)
        for _ in range(50):
            f = random_poly(gf16, rng, 3)
            c = rng.randrange(16)
            assert f.scale(c) == LinPoly(gf16, [c]).compose(f)

    def test_twist_is_frobenius_on_the_left(self, gf16):
        """x^[s] o f equals twist(s)."""
        rng = random.Random(8)
        for _ in range(50):
            f = random_poly(gf16, rng, 3)
            s = rng.randrange(4)
            assert f.twist(s) == LinPoly.monomial(gf16, s).compose(f)


class TestSymbolicDivision:
    """Test suite for right and left symbolic division."""

    def test_right_division_round_trip(self, gf16):
        """f = quo o g + rem with qdeg(rem) < qdeg(g)."""
        rng = random.Random(12)
        for _ in range(300):
            f = random_poly(gf16, rng, 6)
            g = random_nonzero_poly(gf16, rng, 3)
            quo, rem = f.right_divide(g)
            assert quo.compose(g) + rem == f
            assert rem.qdeg < g.qdeg

    def test_left_division_round_trip(self, gf16):
        """f = g o quo + rem with qdeg(rem) < qdeg(g)."""
        rng = random.Random(13)
        for _ in range(300):
            f = random_poly(gf16, rng, 6)
            g = random_nonzero_poly(gf16, rng, 3)
            quo, rem = f.left_divide(g)
            assert g.compose(quo) + rem == f
            assert rem.qdeg < g.qdeg

    def test_exact_divisions(self):
        """Exact products divide with zero remainder on both sides over GF(27)."""
        field = field_new(3, 3)
        rng = random.Random(14)
        for _ in range(100):
            a = random_nonzero_poly(field, rng, 3)
            b = random_nonzero_poly(field, rng, 3)
            product = a.compose(b)
            quo, rem = product.right_divide(b)
            assert quo == a and rem.is_zero()
            quo, rem = product.left_divide(a)
            assert quo == b and rem.is_zero()

    def test_division_by_zero(self, gf8):
        """Dividing by the zero polynomial raises."""
        f = LinPoly(gf8, [1, 2])
        with pytest.raises(ZeroPolynomialDivisionError):
            f.left_divide(LinPoly.zero(gf8))
        with pytest.raises(ZeroDivisionError):
            f.right_divide(LinPoly.zero(gf8))

    def test_division_is_counted(self, gf8):
        """Each division call is one symbolic division."""
        counter = OpCounter()
        f = LinPoly(gf8, [1, 2, 3])
        with counting(counter):
            f.left_divide(LinPoly(gf8, [1, 1]))
            f.right_divide(LinPoly(gf8, [1, 1]))
        assert counter.symbolic_divisions == 2


class TestInterpolationPolynomials:
    """Test suite for Moore matrices, annihilators and Lagrange polynomials."""

    def test_moore_matrix(self, gf8):
        """Rows are successive Frobenius images."""
        matrix = moore(gf8, 2, [1, 2, 4])
        assert matrix.rows == ((1, 2, 4), (1, 4, 6))

    def test_moore_needs_rows(self, gf8):
        """At least one row is required."""
        with pytest.raises(ValueError):
            moore(gf8, 0, [1])

    def test_full_annihilator(self, gf8):
        """The annihilator of the whole of GF(8) is x^8 - x."""
        assert annihilator(gf8, [1, 2, 4]).coeffs == (1, 0, 0, 1)

    def test_annihilator_kills_span(self, gf16):
        """Pi is monic of q-degree dim U and vanishes exactly on U."""
        basis = [3, 5]
        pi = annihilator(gf16, basis)
        assert pi.is_monic() and pi.qdeg == 2
        span = {0, 3, 5, 3 ^ 5}
        for a in gf16.elements():
            assert (pi(a) == 0) == (a in span)

    def test_dependent_elements(self, gf8):
        """Dependent points are reported."""
        with pytest.raises(DependentElementsError):
            annihilator(gf8, [3, 5, 6])

    def test_lagrange_worked_example(self, gf8):
        """Lambda through (1,a+1), (a,0), (a^2,a) is a^5 x + a^2 x^[2]."""
        lam = lagrange(gf8, [1, 2, 4], [3, 0, 2])
        assert lam.coeffs == (7, 0, 4)

    def test_lagrange_interpolates(self, gf16):
        """Lambda(g_i) = r_i and qdeg(Lambda) < n."""
        rng = random.Random(21)
        points = [1, 2, 4]
        for _ in range(50):
            values = [rng.randrange(16) for _ in points]
            pi, lam = annihilator_and_lagrange(gf16, points, values)
            assert [lam(g) for g in points] == values
            assert lam.qdeg < len(points)
            assert all(pi(g) == 0 for g in points)

    def test_lagrange_length_mismatch(self, gf8):
        """Points and values must pair up."""
        with pytest.raises(ValueError):
            lagrange(gf8, [1, 2], [1])

    def test_root_space(self, gf16):
        """The roots of an annihilator span the original subspace."""
        basis = [3, 5, 8]
        roots = root_space(annihilator(gf16, basis))
        assert len(roots) == 3
        assert gflinalg.rank(gf16, roots + basis) == 3

    def test_root_space_of_zero(self, gf8):
        """The zero polynomial has no finite root space."""
        with pytest.raises(ZeroPolynomialDivisionError):
            root_space(LinPoly.zero(gf8))

    def test_root_space_odd_characteristic(self):
        """Root space over GF(9) matches brute force."""
        field = field_new(3, 2)
        pi = annihilator(field, [4])
        roots = root_space(pi)
        brute = [a for a in field.elements() if pi(a) == 0]
        assert len(roots) == 1
        assert len(brute) == 3


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
