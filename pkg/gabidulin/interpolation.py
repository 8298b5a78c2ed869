"""
Interpolation Modules over L_q

This module works with rank-2 left modules over the ring of q-linearized
polynomials: the (0, k-1)-weighted term-over-position order, leading data,
the interpolation module of a received word, and two algorithms producing a
minimal basis of it (Euclidean and point-by-point).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Iterator, List, Optional, Sequence, Tuple

from typing_extensions import Literal

from .errors import CodeParameterError
from .field import Element, FieldSpec
from .linpoly import NEG_INF, LinPoly, QDegree, annihilator_and_lagrange

logger = logging.getLogger(__name__)

BasisAlgorithm = Literal["eea", "iterative", "iter"]


@dataclass(frozen=True)
class OrderWeights:
    """Weights (k1, k2) of the two positions; always (0, k-1) for decoding."""

    k1: int
    k2: int

    @classmethod
    def for_dimension(cls, k: int) -> "OrderWeights":
        if k < 1:
            raise CodeParameterError(f"Code dimension must be >= 1, got {k}")
        return cls(0, k - 1)

    def weight(self, position: int) -> int:
        return self.k1 if position == 1 else self.k2


@dataclass(frozen=True, order=True)
class LeadingMonomial:
    """x^{[qdeg]} in the given position; ordered by (weighted q-degree, position)."""

    weighted_qdeg: int
    position: int
    qdeg: int


@dataclass(frozen=True)
class ModVec:
    """An element [f1(x) f2(x)] of L_q^2, read as Q(x, y) = f1(x) + f2(y)."""

    f1: LinPoly
    f2: LinPoly

    @classmethod
    def zero(cls, field: FieldSpec) -> "ModVec":
        return cls(LinPoly.zero(field), LinPoly.zero(field))

    def is_zero(self) -> bool:
        return self.f1.is_zero() and self.f2.is_zero()

    def __add__(self, other: "ModVec") -> "ModVec":
        return ModVec(self.f1 + other.f1, self.f2 + other.f2)

    def __sub__(self, other: "ModVec") -> "ModVec":
        return ModVec(self.f1 - other.f1, self.f2 - other.f2)

    def scale(self, c: Element) -> "ModVec":
        return ModVec(self.f1.scale(c), self.f2.scale(c))

    def twist(self, s: int) -> "ModVec":
        return ModVec(self.f1.twist(s), self.f2.twist(s))

    def compose_left(self, a: LinPoly) -> "ModVec":
        """a o [f1, f2] = [a o f1, a o f2]."""
        return ModVec(a.compose(self.f1), a.compose(self.f2))

    def evaluate(self, x: Element, y: Element) -> Element:
        """Q(x, y) = f1(x) + f2(y)."""
        return self.f1.field.add(self.f1(x), self.f2(y))

    def is_member(self, points: Sequence[Element], values: Sequence[Element]) -> bool:
        """Membership test Q(g_i, r_i) = 0 for every interpolation point."""
        return all(self.evaluate(g, r) == 0 for g, r in zip(points, values))


def weighted_qdeg(v: ModVec, w: OrderWeights) -> QDegree:
    """max(qdeg(f1) + k1, qdeg(f2) + k2); NEG_INF for the zero vector."""
    return max(v.f1.qdeg + w.k1, v.f2.qdeg + w.k2)


def leading_position(v: ModVec, w: OrderWeights) -> int:
    """
    Position (1 or 2) of the leading monomial. On equal weighted degree the
    second position wins.

    Raises:
        ValueError: For the zero vector
    """
    if v.is_zero():
        raise ValueError("The zero vector has no leading position")
    return 2 if v.f2.qdeg + w.k2 >= v.f1.qdeg + w.k1 else 1


def leading_monomial(v: ModVec, w: OrderWeights) -> LeadingMonomial:
    position = leading_position(v, w)
    qdeg = int(v.f1.qdeg if position == 1 else v.f2.qdeg)
    return LeadingMonomial(qdeg + w.weight(position), position, qdeg)


@dataclass(frozen=True)
class Basis2:
    """Two-row basis with rows b1, b2 and their weighted q-degrees."""

    b1: ModVec
    b2: ModVec
    ell1: QDegree
    ell2: QDegree

    @classmethod
    def from_rows(cls, b1: ModVec, b2: ModVec, w: OrderWeights) -> "Basis2":
        return cls(b1, b2, weighted_qdeg(b1, w), weighted_qdeg(b2, w))

    @property
    def rows(self) -> Tuple[ModVec, ModVec]:
        return self.b1, self.b2


@dataclass(frozen=True)
class IterState:
    """
    Point-by-point state: the stored matrix [P -K; N -D] after ``step`` points,
    with the discrepancies that produced it.
    """

    step: int
    P: LinPoly
    K: LinPoly
    N: LinPoly
    D: LinPoly
    gamma: Element = 0
    delta: Element = 0
    branch: str = "init"

    @property
    def row1(self) -> ModVec:
        return ModVec(self.P, -self.K)

    @property
    def row2(self) -> ModVec:
        return ModVec(self.N, -self.D)


def is_minimal(b: Basis2, w: OrderWeights) -> bool:
    """A two-row basis is minimal exactly when its leading positions differ."""
    return leading_position(b.b1, w) != leading_position(b.b2, w)


def _check_instance(points: Sequence[Element], values: Sequence[Element], k: int) -> None:
    if len(points) != len(values):
        raise CodeParameterError("Received word length differs from the number of generators")
    if not 1 <= k <= len(points):
        raise CodeParameterError(f"Need 1 <= k <= n, got k={k}, n={len(points)}")


def interpolation_module(
    field: FieldSpec, points: Sequence[Element], values: Sequence[Element], k: int
) -> Tuple[ModVec, ModVec]:
    """
    Generating rows [Pi_g, 0] and [-Lambda_{g,r}, x] of the interpolation module.

    Raises:
        DependentElementsError: If the points are linearly dependent
        CodeParameterError: On length or dimension mismatch
    """
    _check_instance(points, values, k)
    pi, lam = annihilator_and_lagrange(field, points, values)
    return ModVec(pi, LinPoly.zero(field)), ModVec(-lam, LinPoly.identity(field))


@dataclass
class EEATrace:
    """Quotients and remainders produced by each Euclidean step."""

    quotients: List[LinPoly] = dc_field(default_factory=list)
    remainders: List[LinPoly] = dc_field(default_factory=list)


def minimal_basis_eea(
    field: FieldSpec,
    points: Sequence[Element],
    values: Sequence[Element],
    k: int,
    trace: Optional[EEATrace] = None,
) -> Basis2:
    """
    Minimal basis of the interpolation module via the right Euclidean algorithm.

    Starting from [P K; N D] = [Pi 0; -Lambda x], repeat while
    qdeg(D) + k - 1 < qdeg(N): divide P = quo o N + rem and replace the matrix by
    [N D; rem K - quo o D].

    Args:
        trace: Optional collector for each step's quotient and remainder

    Returns:
        Basis2 with lpos(b1) = 1 and lpos(b2) = 2
    """
    w = OrderWeights.for_dimension(k)
    row1, row2 = interpolation_module(field, points, values, k)
    P, K = row1.f1, row1.f2
    N, D = row2.f1, row2.f2
    steps = 0
    # Stop once the second row leads from position 2
    while D.qdeg + k - 1 < N.qdeg:
        quo, rem = P.right_divide(N)
        if trace is not None:
            trace.quotients.append(quo)
            trace.remainders.append(rem)
        # Shift rows up; the new second row is the remainder row
        P, K, N, D = N, D, rem, K - quo.compose(D)
        steps += 1
    basis = Basis2.from_rows(ModVec(P, K), ModVec(N, D), w)
    logger.debug("EEA finished after %d steps with degrees (%s, %s)", steps, basis.ell1, basis.ell2)
    return basis


def iterate_minimal_basis(
    field: FieldSpec, points: Sequence[Element], values: Sequence[Element], k: int
) -> Iterator[IterState]:
    """
    Point-by-point construction of a minimal basis, yielding the state after
    every point (the initial identity state first).

    With Gamma = P(g_i) - K(r_i) and Delta = N(g_i) - D(r_i), the state is composed
    on the left by [x^q - Gamma^{q-1}x, 0; Delta x, -Gamma x] when
    qdeg(P) <= qdeg(D) + k - 1 and Gamma != 0, or when Delta = 0; otherwise by
    [Delta x, -Gamma x; 0, x^q - Delta^{q-1}x]. A point with Gamma = Delta = 0 is
    already interpolated by both rows and leaves the state unchanged.
    """
    _check_instance(points, values, k)
    q = field.q
    P = LinPoly.identity(field)
    K = LinPoly.zero(field)
    N = LinPoly.zero(field)
    D = -LinPoly.identity(field)
    yield IterState(0, P, K, N, D)

    for i, (g, r) in enumerate(zip(points, values), start=1):
        # Discrepancies of both rows at the new point
        gamma = field.sub(P(g), K(r))
        delta = field.sub(N(g), D(r))
        if gamma == 0 and delta == 0:
            branch = "skip"
        elif (P.qdeg <= D.qdeg + k - 1 and gamma != 0) or delta == 0:
            # Raise the first row, cancel Delta in the second
            step = LinPoly(field, [field.neg(field.power(gamma, q - 1)), 1])
            P, K, N, D = (
                step.compose(P),
                step.compose(K),
                N.scale(field.neg(gamma)) + P.scale(delta),
                D.scale(field.neg(gamma)) + K.scale(delta),
            )
            branch = "first"
        else:
            # Raise the second row, cancel Gamma in the first
            step = LinPoly(field, [field.neg(field.power(delta, q - 1)), 1])
            P, K, N, D = (
                P.scale(delta) + N.scale(field.neg(gamma)),
                K.scale(delta) + D.scale(field.neg(gamma)),
                step.compose(N),
                step.compose(D),
            )
            branch = "second"
        yield IterState(i, P, K, N, D, gamma, delta, branch)


def minimal_basis_iterative(
    field: FieldSpec, points: Sequence[Element], values: Sequence[Element], k: int
) -> Basis2:
    """
    Minimal basis of the interpolation module by processing one point at a time.

    Returns:
        Basis2 with rows [P, -K] and [N, -D] of the final state
    """
    w = OrderWeights.for_dimension(k)
    state = None
    for state in iterate_minimal_basis(field, points, values, k):
        pass
    basis = Basis2.from_rows(state.row1, state.row2, w)
    logger.debug("Iterative construction finished with degrees (%s, %s)", basis.ell1, basis.ell2)
    return basis


BASIS_ALGORITHMS = {
    "eea": minimal_basis_eea,
    "iterative": minimal_basis_iterative,
}


def minimal_basis(
    field: FieldSpec, points: Sequence[Element], values: Sequence[Element], k: int, algorithm: BasisAlgorithm = "eea"
) -> Basis2:
    """Dispatch to one of the minimal-basis algorithms by name ('eea', 'iterative' or 'iter')."""
    name = "iterative" if algorithm == "iter" else algorithm
    try:
        builder = BASIS_ALGORITHMS[name]
    except KeyError:
        raise ValueError(f"Unknown basis algorithm '{algorithm}'; use 'eea' or 'iterative'") from None
    return builder(field, points, values, k)


def plm_leading(a1: LinPoly, a2: LinPoly, basis: Basis2, w: OrderWeights) -> LeadingMonomial:
    """
    Leading monomial of a1 o b1 + a2 o b2 as predicted from leading data alone:
    the larger of lm(a_i) o lm(b_i) over the nonzero a_i.

    Raises:
        ValueError: If both coefficients are zero
    """
    predictions = []
    for a, b in ((a1, basis.b1), (a2, basis.b2)):
        if a.is_zero():
            continue
        lm = leading_monomial(b, w)
        shift = int(a.qdeg)
        predictions.append(LeadingMonomial(lm.weighted_qdeg + shift, lm.position, lm.qdeg + shift))
    if not predictions:
        raise ValueError("At least one combination coefficient must be nonzero")
    return max(predictions)
