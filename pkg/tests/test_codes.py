"""
Unit tests for Gabidulin codes

Tests code validation, encoding, rank weights, the rank-error channel and
error span polynomials.
"""

import galois
import numpy as np
import pytest
import random
import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from gabidulin import gflinalg
from gabidulin.codes import CodeSpec
from gabidulin.errors import CodeParameterError, DependentElementsError, MessageDegreeError, RankOutOfRangeError
from gabidulin.field import field_new
from gabidulin.linpoly import LinPoly


class TestCodeSpec:
    """Test suite for code construction."""

    @pytest.fixture
    def gf8(self):
        return field_new(2, 3)

    def test_standard_generators(self, gf8):
        """Standard generators are 1, alpha, alpha^2."""
        code = CodeSpec.with_standard_generators(gf8, 3, 2)
        assert code.generators == (1, 2, 4)

    def test_dependent_generators(self, gf8):
        """Generators must be linearly independent over GF(q)."""
        with pytest.raises(DependentElementsError):
            CodeSpec(gf8, 3, 2, (1, 2, 3))

    @pytest.mark.parametrize("n,k", [(3, 0), (2, 3), (4, 2)])
    def test_dimension_bounds(self, gf8, n, k):
        """1 <= k <= n <= m is enforced."""
        generators = tuple(range(1, n + 1))
        with pytest.raises(CodeParameterError):
            CodeSpec(gf8, n, k, generators)

    def test_generator_count(self, gf8):
        """Exactly n generators are required."""
        with pytest.raises(CodeParameterError):
            CodeSpec(gf8, 3, 2, (1, 2))

    def test_generator_range(self, gf8):
        """Generators must be field elements."""
        with pytest.raises(ValueError):
            CodeSpec(gf8, 2, 1, (1, 9))

    def test_as_dict(self, gf8):
        """The dictionary form carries field and code parameters."""
        code = CodeSpec.with_standard_generators(gf8, 3, 2)
        assert code.as_dict() == {"q": 2, "m": 3, "modulus": [1, 1, 0, 1], "n": 3, "k": 2, "generators": [1, 2, 4]}


class TestEncoding:
    """Test suite for encoding and message handling."""

    @pytest.fixture
    def code(self):
        """The worked-example code over GF(8)."""
        return CodeSpec(field_new(2, 3), 3, 2, (1, 2, 4))

    def test_worked_example_codeword(self, code):
        """a x + x^[1] encodes to (a + 1, 0, a^2 + 1)."""
        message = code.message_from_coeffs([2, 1])
        assert code.encode(message) == (3, 0, 5)

    def test_encode_coeffs(self, code):
        """Encoding straight from coefficients matches encoding the message polynomial."""
        assert code.encode_coeffs([2, 1]) == (3, 0, 5)
        assert code.encode_coeffs([0, 6]) == (6, 5, 2)
        assert code.encode_coeffs([5]) == code.encode(code.message_from_coeffs([5, 0]))
        with pytest.raises(MessageDegreeError):
            code.encode_coeffs([1, 2, 3])

    def test_zero_message(self, code):
        """The zero message encodes to the zero word."""
        assert code.encode(code.message_from_coeffs([0, 0])) == (0, 0, 0)

    def test_too_many_coefficients(self, code):
        """At most k coefficients make a message."""
        with pytest.raises(MessageDegreeError):
            code.message_from_coeffs([1, 2, 3])

    def test_encode_rejects_high_degree(self, code):
        """Polynomials of q-degree >= k are not messages."""
        with pytest.raises(MessageDegreeError):
            code.encode(LinPoly(code.field, [0, 0, 1]))

    def test_encoding_is_linear(self, code):
        """encode(m1 + m2) = encode(m1) + encode(m2)."""
        rng = random.Random(3)
        for _ in range(50):
            m1 = code.random_message(rng.randrange(1000))
            m2 = code.random_message(rng.randrange(1000))
            assert code.encode(m1 + m2) == code.add_words(code.encode(m1), code.encode(m2))

    def test_generator_matrix(self, code):
        """Encoding equals the message row vector times the Moore matrix."""
        field = code.field
        rows = code.generator_matrix().rows
        for a0 in field.elements():
            for a1 in field.elements():
                word = tuple(field.add(field.mul(a0, x), field.mul(a1, y)) for x, y in zip(*rows))
                assert code.encode(code.message_from_coeffs([a0, a1])) == word

    def test_codewords_at_minimum_distance(self, code):
        """Distinct codewords are at rank distance at least n - k + 1."""
        field = code.field
        words = [code.encode(code.message_from_coeffs([a, b])) for a in field.elements() for b in field.elements()]
        zero = (0,) * code.n
        assert min(code.rank_distance(w, zero) for w in words if w != zero) == code.n - code.k + 1

    def test_message_coeffs(self, code):
        """Message coefficients are padded to k."""
        assert code.message_coeffs(code.message_from_coeffs([5])) == (5, 0)

    def test_check_word(self, code):
        """Words must have length n and contain field elements."""
        with pytest.raises(CodeParameterError):
            code.check_word([1, 2])
        with pytest.raises(ValueError):
            code.check_word([1, 2, 8])


class TestRankMetric:
    """Test suite for rank weights, the channel and error span polynomials."""

    @pytest.fixture
    def code(self):
        return CodeSpec.with_standard_generators(field_new(2, 8), 8, 4)

    def test_rank_weight(self):
        """Entries spanning a 2-dimensional space have rank 2."""
        code = CodeSpec.with_standard_generators(field_new(2, 3), 3, 1)
        assert code.rank_weight((1, 2, 3)) == 2
        assert code.rank_weight((0, 0, 0)) == 0
        assert code.span_basis((1, 2, 3)) == [1, 2]

    def test_rank_weight_odd_characteristic(self):
        """Rank over GF(3) counts scalar multiples once."""
        field = field_new(3, 3)
        code = CodeSpec.with_standard_generators(field, 3, 1)
        two_a = field.from_coeffs([0, 2, 0])
        assert code.rank_weight((3, two_a, 1)) == 2

    @pytest.mark.parametrize("q", [3, 5, 7])
    def test_odd_rank_matches_galois(self, q):
        """Coordinate elimination agrees with galois on random small matrices."""
        gf = galois.GF(q)
        rng = random.Random(q)
        for _ in range(100):
            rows = [[rng.randrange(q) for _ in range(4)] for _ in range(rng.randint(1, 5))]
            if rng.random() < 0.3:
                rows.append([(2 * a + b) % q for a, b in zip(rows[0], rows[-1])])
            assert gflinalg.gfq_rank(rows, q) == int(np.linalg.matrix_rank(gf(rows)))

    @pytest.mark.parametrize("t", [0, 1, 2, 3, 5, 8])
    def test_random_error_rank(self, code, t):
        """Channel errors have exactly the requested rank."""
        for seed in range(10):
            assert code.rank_weight(code.random_error(t, seed)) == t

    def test_random_error_is_seeded(self, code):
        """Equal seeds give equal errors."""
        assert code.random_error(3, 42) == code.random_error(3, 42)

    def test_random_error_odd_characteristic(self):
        """Rank-t errors over GF(3^4)."""
        code = CodeSpec.with_standard_generators(field_new(3, 4), 4, 2)
        for seed in range(10):
            assert code.rank_weight(code.random_error(2, seed)) == 2

    @pytest.mark.parametrize("t", [-1, 9])
    def test_random_error_out_of_range(self, code, t):
        """Ranks outside [0, min(m, n)] are rejected."""
        with pytest.raises(RankOutOfRangeError):
            code.random_error(t)

    def test_error_span_polynomial(self, code):
        """D has q-degree rank(e) and D(c_i) = D(r_i) for r = c + e."""
        rng = random.Random(31)
        for trial in range(200):
            t = rng.randint(1, 8)
            error = code.random_error(t, trial)
            codeword = code.encode(code.random_message(trial))
            received = code.add_words(codeword, error)
            span = code.error_span_poly(error)
            assert span.qdeg == code.rank_weight(error) == t
            assert span.is_monic()
            assert code.equalizes(span, codeword, received)

    def test_error_span_of_zero_word(self, code):
        """The zero word has no error span polynomial."""
        with pytest.raises(RankOutOfRangeError):
            code.error_span_poly((0,) * code.n)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
