"""
Gabidulin Codes

This module defines Gabidulin codes (evaluation codes of q-linearized
polynomials of q-degree < k at n linearly independent points), encoding,
rank-metric computations and a rank-error channel.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import galois
import numpy as np

from . import gflinalg
from .errors import CodeParameterError, DependentElementsError, MessageDegreeError, RankOutOfRangeError
from .field import Element, FieldSpec
from .linpoly import LinPoly, MooreMatrix, annihilator, moore

logger = logging.getLogger(__name__)

Word = Tuple[Element, ...]
Message = LinPoly


@dataclass(frozen=True)
class CodeSpec:
    """A Gabidulin code of length n and dimension k over ``field`` with generators g."""

    field: FieldSpec
    n: int
    k: int
    generators: Tuple[Element, ...]

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(int(g) for g in self.generators))
        if len(self.generators) != self.n:
            raise CodeParameterError(f"Expected {self.n} generators, got {len(self.generators)}")
        if not 1 <= self.k <= self.n <= self.field.m:
            raise CodeParameterError(
                f"Need 1 <= k <= n <= m, got k={self.k}, n={self.n}, m={self.field.m}"
            )
        for g in self.generators:
            self.field.check(g)
        if gflinalg.rank(self.field, self.generators) != self.n:
            raise DependentElementsError("Generators are not linearly independent over GF(q)")

    @classmethod
    def with_standard_generators(cls, field: FieldSpec, n: int, k: int) -> "CodeSpec":
        """Code whose generators are the basis elements 1, alpha, ..., alpha^{n-1}."""
        return cls(field, n, k, tuple(field.q ** i for i in range(n)))

    def check_word(self, word: Sequence[Element]) -> Word:
        if len(word) != self.n:
            raise CodeParameterError(f"Word must have length {self.n}, got {len(word)}")
        return tuple(self.field.check(int(a)) for a in word)

    def message_from_coeffs(self, coeffs: Sequence[Element]) -> Message:
        """
        Message polynomial a_0 x + a_1 x^{[1]} + ... from its coefficients.

        Raises:
            MessageDegreeError: If more than k coefficients are given
        """
        if len(coeffs) > self.k:
            raise MessageDegreeError(f"A message has at most {self.k} coefficients, got {len(coeffs)}")
        return LinPoly(self.field, [self.field.check(int(c)) for c in coeffs])

    def message_coeffs(self, message: Message) -> Tuple[Element, ...]:
        """Coefficients padded to length k."""
        return tuple(message.padded(self.k))

    def add_words(self, a: Sequence[Element], b: Sequence[Element]) -> Word:
        return tuple(self.field.add(x, y) for x, y in zip(a, b))

    def sub_words(self, a: Sequence[Element], b: Sequence[Element]) -> Word:
        return tuple(self.field.sub(x, y) for x, y in zip(a, b))

    def generator_matrix(self) -> MooreMatrix:
        return moore(self.field, self.k, self.generators)

    def encode(self, message: Message) -> Word:
        """
        Evaluate the message polynomial at every generator.

        Raises:
            MessageDegreeError: If qdeg(message) >= k
        """
        if message.qdeg >= self.k:
            raise MessageDegreeError(f"Message q-degree {message.qdeg} is not below k={self.k}")
        return tuple(message(g) for g in self.generators)

    def encode_coeffs(self, coeffs: Sequence[Element]) -> Word:
        """Encode the message a_0 x + a_1 x^{[1]} + ... given by its coefficients."""
        return self.encode(self.message_from_coeffs(coeffs))

    def rank_weight(self, word: Sequence[Element]) -> int:
        """Dimension of the GF(q)-span of the entries."""
        return gflinalg.rank(self.field, list(word))

    def rank_distance(self, a: Sequence[Element], b: Sequence[Element]) -> int:
        return self.rank_weight(self.sub_words(a, b))

    def span_basis(self, word: Sequence[Element]) -> List[Element]:
        """Echelonized GF(q)-basis of the span of the entries (pivots ascending)."""
        return gflinalg.row_space_basis(self.field, list(word))

    def random_error(self, t: int, seed: Optional[int] = None) -> Word:
        """
        Random word of rank exactly t, built as A @ B with A (m x t) and B (t x n)
        over GF(q), both resampled until they have rank t.

        Args:
            t: Target rank, 0 <= t <= min(m, n)
            seed: Seed for the generator; equal seeds give equal words

        Raises:
            RankOutOfRangeError: If t is out of range
        """
        m, n = self.field.m, self.n
        if not 0 <= t <= min(m, n):
            raise RankOutOfRangeError(f"Error rank must lie in [0, {min(m, n)}], got {t}")
        if t == 0:
            return (0,) * n
        gf = galois.GF(self.field.q)
        rng = np.random.default_rng(seed)

        def full_rank(shape: Tuple[int, int]) -> galois.FieldArray:
            while True:
                array = gf(rng.integers(0, self.field.q, size=shape))
                if np.linalg.matrix_rank(array) == t:
                    return array

        product = np.asarray(full_rank((m, t)) @ full_rank((t, n)), dtype=int)
        return tuple(self.field.from_coeffs(int(c) for c in product[:, j]) for j in range(n))

    def random_message(self, seed: Optional[int] = None) -> Message:
        rng = np.random.default_rng(seed)
        return LinPoly(self.field, [int(c) for c in rng.integers(0, self.field.order, size=self.k)])

    def error_span_poly(self, error: Sequence[Element]) -> LinPoly:
        """
        Annihilator of the span of the error entries; monic with q-degree equal
        to the error rank, and D(r_i) = D(c_i) whenever error = r - c.

        Raises:
            RankOutOfRangeError: For the zero word
        """
        basis = self.span_basis(error)
        if not basis:
            raise RankOutOfRangeError("The zero word has no error span polynomial")
        return annihilator(self.field, basis)

    @staticmethod
    def equalizes(poly: LinPoly, a: Sequence[Element], b: Sequence[Element]) -> bool:
        """True when poly(a_i) = poly(b_i) for every position."""
        return all(poly(x) == poly(y) for x, y in zip(a, b))

    def as_dict(self) -> dict:
        return {**self.field.as_dict(), "n": self.n, "k": self.k, "generators": list(self.generators)}
