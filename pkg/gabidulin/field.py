"""
Finite Field Arithmetic

This module implements exact arithmetic in GF(q^m) as an extension of the prime
field GF(q). Elements are plain integers: the coordinate vector (a_0, ..., a_{m-1})
in the polynomial basis {1, alpha, ..., alpha^{m-1}} is encoded as sum a_i * q^i.
"""

import logging
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence, Tuple

import galois

from .config import get_settings
from .counters import tally_field_div, tally_mul
from .errors import FieldParameterError, ReducibleModulusError, ZeroInversionError

logger = logging.getLogger(__name__)

Element = int

MAX_FIELD_ORDER = 1 << 32


def _is_irreducible(q: int, modulus: Sequence[int]) -> bool:
    poly = galois.Poly(list(modulus), field=galois.GF(q), order="asc")
    return bool(poly.is_irreducible())


def _digits(value: int, q: int, length: int) -> List[int]:
    out = []
    for _ in range(length):
        value, digit = divmod(value, q)
        out.append(digit)
    return out


def check_field_parameters(q: int, m: int) -> None:
    """
    Validate the characteristic, degree and size of GF(q^m).

    Raises:
        FieldParameterError: If q is not prime, m < 1 or q^m exceeds 2^32
    """
    if not isinstance(q, int) or q < 2 or not galois.is_prime(q):
        raise FieldParameterError(f"Base field order must be prime, got {q}")
    if not isinstance(m, int) or m < 1:
        raise FieldParameterError(f"Extension degree must be >= 1, got {m}")
    if q ** m > MAX_FIELD_ORDER:
        raise FieldParameterError(f"Field order {q}^{m} exceeds 2^32")


@lru_cache(maxsize=None)
def default_modulus(q: int, m: int) -> Tuple[int, ...]:
    """
    Smallest monic irreducible polynomial of degree m over GF(q).

    Candidates are ordered by their integer encoding with the leading coefficient
    as most significant digit, so for GF(8) the result is x^3 + x + 1.

    Returns:
        Ascending coefficient tuple of length m + 1
    """
    check_field_parameters(q, m)
    for value in range(q ** m, 2 * q ** m):
        coeffs = _digits(value, q, m + 1)
        if m > 1 and coeffs[0] == 0:
            continue
        if _is_irreducible(q, coeffs):
            return tuple(coeffs)
    raise FieldParameterError(f"No irreducible polynomial of degree {m} over GF({q})")  # pragma: no cover


class FieldSpec:
    """
    The field GF(q^m) with a fixed polynomial basis.

    Instances are immutable after construction and safe to share across threads.
    Fields of order up to the configured table limit use log/antilog tables;
    larger fields fall back to polynomial arithmetic modulo the modulus.
    """

    def __init__(self, q: int, m: int, modulus: Sequence[int], table_limit: Optional[int] = None):
        """
        Validate parameters and precompute arithmetic tables.

        Args:
            q: Prime characteristic
            m: Extension degree (>= 1)
            modulus: Ascending coefficient list of a monic irreducible polynomial of degree m

        Raises:
            FieldParameterError: If q is not prime, m < 1, the field is too large
                or the modulus is malformed
            ReducibleModulusError: If the modulus factors over GF(q)
        """
        check_field_parameters(q, m)

        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1:
            raise FieldParameterError(f"Modulus must have {m + 1} coefficients, got {len(modulus)}")
        if any(not 0 <= c < q for c in modulus):
            raise FieldParameterError(f"Modulus coefficients must lie in [0, {q})")
        if modulus[-1] != 1:
            raise FieldParameterError("Modulus must be monic")
        if not _is_irreducible(q, modulus):
            raise ReducibleModulusError(f"Modulus {format_poly(modulus)} is reducible over GF({q})")

        self.q = q
        self.m = m
        self.modulus = modulus
        self.order = q ** m
        self._mod_int = sum(c << i for i, c in enumerate(modulus)) if q == 2 else None

        limit = get_settings().table_limit if table_limit is None else table_limit
        self._exp: Optional[List[int]] = None
        self._log: Optional[List[int]] = None
        self.primitive_element: Optional[int] = None
        if self.order <= limit:
            self._build_tables()

    def _build_tables(self) -> None:
        """Fill log/antilog tables from a primitive element."""
        group_order = self.order - 1
        primes, _ = galois.factors(group_order) if group_order > 1 else ([], [])
        generator = 1
        for candidate in range(1, self.order):
            if all(self._slow_pow(candidate, group_order // p) != 1 for p in primes):
                generator = candidate
                break

        exp = [0] * (2 * group_order)
        log = [0] * self.order
        value = 1
        for i in range(group_order):
            exp[i] = value
            log[value] = i
            value = self._slow_mul(value, generator)
        for i in range(group_order, 2 * group_order):
            exp[i] = exp[i - group_order]

        self._exp = exp
        self._log = log
        self.primitive_element = generator
        logger.debug("Built log tables for GF(%d^%d) with generator %d", self.q, self.m, generator)

    def _slow_mul(self, a: int, b: int) -> int:
        if self.q == 2:
            result = 0
            top = 1 << self.m
            while b:
                if b & 1:
                    result ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a ^= self._mod_int
            return result

        q, m = self.q, self.m
        da = _digits(a, q, m)
        db = _digits(b, q, m)
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = (prod[i + j] + x * y) % q
        for top in range(2 * m - 2, m - 1, -1):
            c = prod[top]
            if c:
                for i in range(m + 1):
                    prod[top - m + i] = (prod[top - m + i] - c * self.modulus[i]) % q
        return self.from_coeffs(prod[:m])

    def _slow_pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._slow_mul(result, a)
            e >>= 1
            if e:
                a = self._slow_mul(a, a)
        return result

    def to_coeffs(self, a: Element) -> List[int]:
        """Coordinates of ``a`` in the polynomial basis, lowest power first."""
        return _digits(a, self.q, self.m)

    def from_coeffs(self, coeffs: Iterable[int]) -> Element:
        value = 0
        for c in reversed(list(coeffs)):
            value = value * self.q + (c % self.q)
        return value

    def check(self, a: Element) -> Element:
        """Return ``a`` if it encodes a field element, raise otherwise."""
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise FieldParameterError(f"{a!r} is not an element of GF({self.q}^{self.m})")
        return a

    def elements(self) -> range:
        return range(self.order)

    @property
    def alpha(self) -> Element:
        """The class of x modulo the modulus."""
        return self.q % self.order if self.m > 1 else self.from_coeffs([(-self.modulus[0]) % self.q])

    def add(self, a: Element, b: Element) -> Element:
        if self.q == 2:
            return a ^ b
        q = self.q
        result, place = 0, 1
        while a or b:
            a, x = divmod(a, q)
            b, y = divmod(b, q)
            result += ((x + y) % q) * place
            place *= q
        return result

    def neg(self, a: Element) -> Element:
        if self.q == 2:
            return a
        q = self.q
        result, place = 0, 1
        while a:
            a, x = divmod(a, q)
            result += ((-x) % q) * place
            place *= q
        return result

    def sub(self, a: Element, b: Element) -> Element:
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        if a == 0 or b == 0:
            return 0
        tally_mul()
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._slow_mul(a, b)

    def inv(self, a: Element) -> Element:
        """
        Multiplicative inverse.

        Raises:
            ZeroInversionError: If a is zero
        """
        if a == 0:
            raise ZeroInversionError("Cannot invert zero")
        tally_field_div()
        if self._exp is not None:
            group_order = self.order - 1
            return self._exp[(group_order - self._log[a]) % group_order]
        return self._slow_pow(a, self.order - 2)

    def div(self, a: Element, b: Element) -> Element:
        if b == 0:
            raise ZeroInversionError("Division by zero")
        if a == 0:
            return 0
        tally_field_div()
        if self._exp is not None:
            group_order = self.order - 1
            return self._exp[(self._log[a] - self._log[b]) % group_order]
        return self._slow_mul(a, self._slow_pow(b, self.order - 2))

    def power(self, a: Element, e: int) -> Element:
        """a^e for e >= 0 (0^0 = 1); counted as a single multiplication."""
        if e == 0:
            return 1
        if a == 0:
            return 0
        tally_mul()
        if self._exp is not None:
            group_order = self.order - 1
            return self._exp[(self._log[a] * e) % group_order]
        return self._slow_pow(a, e)

    def frobenius(self, a: Element, i: int = 1) -> Element:
        """a^{q^i}; a table lookup when tables exist, never counted."""
        if a == 0 or a == 1:
            return a
        i %= self.m
        if i == 0:
            return a
        if self._exp is not None:
            group_order = self.order - 1
            return self._exp[(self._log[a] * pow(self.q, i, group_order)) % group_order]
        return self._slow_pow(a, self.q ** i)

    def frobenius_inv(self, a: Element, i: int = 1) -> Element:
        """The unique b with b^{q^i} = a."""
        return self.frobenius(a, (self.m - i % self.m) % self.m)

    def frobenius_orbit(self, a: Element, count: int) -> List[Element]:
        """[a, a^q, a^{q^2}, ..., a^{q^{count-1}}]."""
        out = []
        for _ in range(count):
            out.append(a)
            a = self.frobenius(a, 1)
        return out

    def format(self, a: Element) -> str:
        """Human-readable polynomial form in alpha, e.g. 'a^2+a+1'."""
        terms = []
        for i, c in reversed(list(enumerate(self.to_coeffs(a)))):
            if not c:
                continue
            base = "1" if i == 0 else ("a" if i == 1 else f"a^{i}")
            terms.append(base if c == 1 else f"{c}*{base}")
        return "+".join(terms) or "0"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and (self.q, self.m, self.modulus) == (other.q, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.q, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(q={self.q}, m={self.m}, modulus={format_poly(self.modulus)})"

    def as_dict(self) -> dict:
        return {"q": self.q, "m": self.m, "modulus": list(self.modulus)}


def format_poly(coeffs: Sequence[int]) -> str:
    """Render an ascending coefficient list as 'x^3+x+1'."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        base = "1" if i == 0 else ("x" if i == 1 else f"x^{i}")
        terms.append(base if c == 1 else f"{c}{base}" if i else str(c))
    return "+".join(terms) or "0"


@lru_cache(maxsize=64)
def _cached_field(q: int, m: int, modulus: Tuple[int, ...]) -> FieldSpec:
    return FieldSpec(q, m, modulus)


def field_new(q: int, m: int, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """
    Create (or fetch a cached) field GF(q^m).

    Args:
        q: Prime characteristic
        m: Extension degree
        modulus: Optional ascending coefficient list; defaults to the smallest
            monic irreducible polynomial of degree m

    Returns:
        Validated FieldSpec

    Raises:
        FieldParameterError: For non-prime q, bad m, oversize field
        ReducibleModulusError: If the given modulus is reducible
    """
    resolved = default_modulus(q, m) if modulus is None else tuple(int(c) for c in modulus)
    return _cached_field(q, m, resolved)
