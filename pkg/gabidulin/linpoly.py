"""
q-Linearized Polynomials

This module implements the ring L_q(x, q^m) of q-linearized polynomials
f(x) = sum a_i x^{[i]} with x^{[i]} = x^{q^i}, under addition and composition,
together with symbolic division on both sides and the annihilator and Lagrange
constructions used to set up interpolation problems.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple, Union

from .counters import tally_symbolic_div
from .errors import DependentElementsError, ZeroPolynomialDivisionError
from .field import Element, FieldSpec
from .gflinalg import kernel_basis

# q-degree of the zero polynomial; compares below every integer and absorbs addition
NEG_INF = float("-inf")

QDegree = Union[int, float]


class LinPoly:
    """
    A q-linearized polynomial with dense coefficients.

    ``coeffs[i]`` multiplies x^{[i]}. Trailing zeros are trimmed, so the zero
    polynomial has an empty coefficient tuple. Instances are immutable.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: Iterable[Element] = ()):
        values = list(coeffs)
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("LinPoly is immutable")

    @classmethod
    def zero(cls, field: FieldSpec) -> "LinPoly":
        return cls(field)

    @classmethod
    def identity(cls, field: FieldSpec) -> "LinPoly":
        """The polynomial x, identity of composition."""
        return cls(field, [1])

    @classmethod
    def monomial(cls, field: FieldSpec, index: int, coeff: Element = 1) -> "LinPoly":
        return cls(field, [0] * index + [coeff])

    @classmethod
    def from_text(cls, field: FieldSpec, text: str) -> "LinPoly":
        """
        Parse the ``index:element`` form, e.g. ``"0:5 2:3"``.

        Raises:
            ValueError: If a term is malformed or an element is out of range
        """
        coeffs: dict = {}
        for term in text.split():
            try:
                index_text, value_text = term.split(":")
                index, value = int(index_text), int(value_text)
            except ValueError as e:
                raise ValueError(f"Malformed term '{term}': expected index:element") from e
            if index < 0:
                raise ValueError(f"Negative q-degree in term '{term}'")
            coeffs[index] = field.add(coeffs.get(index, 0), field.check(value))
        size = max(coeffs) + 1 if coeffs else 0
        return cls(field, [coeffs.get(i, 0) for i in range(size)])

    @property
    def qdeg(self) -> QDegree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lead(self) -> Element:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lead == 1

    def padded(self, length: int) -> List[Element]:
        """Coefficient list padded with zeros to ``length`` entries."""
        return list(self.coeffs) + [0] * (length - len(self.coeffs))

    def evaluate(self, a: Element) -> Element:
        """f(a) = sum coeffs[i] * a^{q^i}."""
        field = self.field
        acc = 0
        power = a
        for i, c in enumerate(self.coeffs):
            if i:
                power = field.frobenius(power, 1)
            if c:
                acc = field.add(acc, field.mul(c, power))
        return acc

    __call__ = evaluate

    def __add__(self, other: "LinPoly") -> "LinPoly":
        field = self.field
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.padded(size)
        b = other.padded(size)
        return LinPoly(field, [field.add(x, y) for x, y in zip(a, b)])

    def __neg__(self) -> "LinPoly":
        return LinPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other: "LinPoly") -> "LinPoly":
        field = self.field
        size = max(len(self.coeffs), len(other.coeffs))
        a = self.padded(size)
        b = other.padded(size)
        return LinPoly(field, [field.sub(x, y) for x, y in zip(a, b)])

    def scale(self, c: Element) -> "LinPoly":
        """c * f, which equals (c x) o f."""
        field = self.field
        if c == 0:
            return LinPoly(field)
        if c == 1:
            return self
        return LinPoly(field, [field.mul(c, a) for a in self.coeffs])

    def twist(self, s: int) -> "LinPoly":
        """x^{[s]} o f: every coefficient raised to q^s and shifted up by s."""
        if s == 0 or self.is_zero():
            return self
        field = self.field
        return LinPoly(field, [0] * s + [field.frobenius(c, s) for c in self.coeffs])

    def compose(self, other: "LinPoly") -> "LinPoly":
        """
        Composition f o g.

        Coefficient k of the result is sum_{i+j=k} f_i * g_j^{q^i}; q-degrees add
        since the ring has no zero divisors.
        """
        field = self.field
        if self.is_zero() or other.is_zero():
            return LinPoly(field)
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        twisted = list(other.coeffs)
        for i, fi in enumerate(self.coeffs):
            if i:
                twisted = [field.frobenius(c, 1) for c in twisted]
            if fi == 0:
                continue
            for j, gj in enumerate(twisted):
                if gj:
                    result[i + j] = field.add(result[i + j], field.mul(fi, gj))
        return LinPoly(field, result)

    def right_divide(self, divisor: "LinPoly") -> Tuple["LinPoly", "LinPoly"]:
        """
        Right symbolic division: f = quo o g + rem with qdeg(rem) < qdeg(g).

        Raises:
            ZeroPolynomialDivisionError: If g is the zero polynomial
        """
        if divisor.is_zero():
            raise ZeroPolynomialDivisionError("Right division by the zero polynomial")
        tally_symbolic_div()
        field = self.field
        t = int(divisor.qdeg)
        g = divisor.coeffs
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - t)
        for s in range(len(rem) - 1 - t, -1, -1):
            top = rem[s + t]
            if top == 0:
                continue
            # Cancel the top term with c x^{[s]} o g
            c = field.div(top, field.frobenius(g[t], s))
            quo[s] = c
            for j, gj in enumerate(g):
                if gj:
                    rem[s + j] = field.sub(rem[s + j], field.mul(c, field.frobenius(gj, s)))
            rem[s + t] = 0
        return LinPoly(field, quo), LinPoly(field, rem)

    def left_divide(self, divisor: "LinPoly") -> Tuple["LinPoly", "LinPoly"]:
        """
        Left symbolic division: f = g o quo + rem with qdeg(rem) < qdeg(g).

        Each quotient coefficient is a q^t-th root, which always exists and is
        unique because Frobenius is a field automorphism.

        Raises:
            ZeroPolynomialDivisionError: If g is the zero polynomial
        """
        if divisor.is_zero():
            raise ZeroPolynomialDivisionError("Left division by the zero polynomial")
        tally_symbolic_div()
        field = self.field
        t = int(divisor.qdeg)
        g = divisor.coeffs
        rem = list(self.coeffs)
        quo = [0] * max(0, len(rem) - t)
        for s in range(len(rem) - 1 - t, -1, -1):
            top = rem[s + t]
            if top == 0:
                continue
            # Cancel the top term with g o c x^{[s]}
            c = field.frobenius_inv(field.div(top, g[t]), t)
            quo[s] = c
            for j, gj in enumerate(g):
                if gj:
                    rem[s + j] = field.sub(rem[s + j], field.mul(gj, field.frobenius(c, j)))
            rem[s + t] = 0
        return LinPoly(field, quo), LinPoly(field, rem)

    def to_text(self) -> str:
        """``index:element`` pairs by ascending q-degree; empty for zero."""
        return " ".join(f"{i}:{c}" for i, c in enumerate(self.coeffs) if c)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "LinPoly(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "x" if i == 0 else f"x^[{i}]"
            terms.append(mono if c == 1 else f"({self.field.format(c)}){mono}")
        return "LinPoly(" + " + ".join(terms) + ")"


@dataclass(frozen=True)
class MooreMatrix:
    """k x n matrix with entry (i, j) = v_j^{q^i}."""

    rows: Tuple[Tuple[Element, ...], ...]


def moore(field: FieldSpec, k_rows: int, v: Sequence[Element]) -> MooreMatrix:
    """
    Moore matrix with ``k_rows`` rows of successive Frobenius images of ``v``.

    Raises:
        ValueError: If k_rows < 1
    """
    if k_rows < 1:
        raise ValueError("Moore matrix needs at least one row")
    # Column j is the orbit v_j, v_j^q, ..., v_j^{q^{k-1}}
    orbits = [field.frobenius_orbit(a, k_rows) for a in v]
    return MooreMatrix(tuple(zip(*orbits)))


def _frobenius_step(field: FieldSpec, value: Element) -> LinPoly:
    """x^q - value^{q-1} x."""
    return LinPoly(field, [field.neg(field.power(value, field.q - 1)), 1])


def annihilator_and_lagrange(
    field: FieldSpec, points: Sequence[Element], values: Sequence[Element]
) -> Tuple[LinPoly, LinPoly]:
    """
    Joint recursion for the q-annihilator of span(points) and the q-Lagrange
    interpolant through (points[i], values[i]).

    Pi_{i+1} = (x^q - Pi_i(g_{i+1})^{q-1} x) o Pi_i and
    Lambda_{i+1} = Lambda_i - (Lambda_i(g_{i+1}) - r_{i+1}) / Pi_i(g_{i+1}) * Pi_i.

    Raises:
        DependentElementsError: If the points are GF(q)-linearly dependent
        ValueError: If the two sequences differ in length
    """
    if len(points) != len(values):
        raise ValueError("Points and values must have the same length")
    pi = LinPoly.identity(field)
    lam = LinPoly.zero(field)
    for i, (g, r) in enumerate(zip(points, values)):
        v = pi(g)
        if v == 0:
            raise DependentElementsError(f"Element {i} lies in the span of the preceding elements")
        # Correct Lambda at the new point, then extend the annihilator
        residual = field.sub(lam(g), r)
        if residual:
            lam = lam - pi.scale(field.div(residual, v))
        pi = _frobenius_step(field, v).compose(pi)
    return pi, lam


def annihilator(field: FieldSpec, basis: Sequence[Element]) -> LinPoly:
    """
    Monic q-annihilator polynomial of the GF(q)-span of ``basis``.

    Raises:
        DependentElementsError: If the elements are linearly dependent
    """
    pi = LinPoly.identity(field)
    for i, g in enumerate(basis):
        v = pi(g)
        if v == 0:
            raise DependentElementsError(f"Element {i} lies in the span of the preceding elements")
        pi = _frobenius_step(field, v).compose(pi)
    return pi


def lagrange(field: FieldSpec, points: Sequence[Element], values: Sequence[Element]) -> LinPoly:
    """q-Lagrange polynomial Lambda with Lambda(points[i]) = values[i] and qdeg < len(points)."""
    return annihilator_and_lagrange(field, points, values)[1]


def root_space(f: LinPoly) -> List[Element]:
    """
    GF(q)-basis of the roots of f inside GF(q^m), in reduced echelon form.

    Raises:
        ZeroPolynomialDivisionError: If f is the zero polynomial (every element is a root)
    """
    if f.is_zero():
        raise ZeroPolynomialDivisionError("The zero polynomial has no finite root space")
    field = f.field
    images = [f(field.q ** j) for j in range(field.m)]
    return kernel_basis(field, images)
