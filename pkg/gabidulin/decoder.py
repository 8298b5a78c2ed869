"""
Minimal List Decoder

This module finds all codewords closest to a received word by searching the
interpolation module through its minimal-basis parametrization: elements
beta o b1 + gamma o b2 with monic gamma of q-degree j and qdeg(beta) <= l2 - l1 + j,
for j = 0, 1, ... until some element [N, -D] has N left-divisible by D.

Brute-force and chase decoders are provided as oracles and benchmark subjects.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .codes import CodeSpec, Message, Word
from .config import get_settings
from .counters import OpCounter, counting
from .errors import DecodingGuardError, EnumerationGuardError, RankOutOfRangeError
from .field import Element, FieldSpec
from .interpolation import Basis2, BasisAlgorithm, ModVec, minimal_basis
from .linpoly import LinPoly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Candidate:
    """A module element f = beta o b1 + gamma o b2 and its message, if any."""

    f: ModVec
    beta: LinPoly
    gamma: LinPoly
    message: Optional[Message] = None

    @property
    def error_span(self) -> LinPoly:
        """D(x) of f = [N, -D]."""
        return -self.f.f2


@dataclass
class DecodeOutput:
    """Result of a decoding run."""

    messages: List[Message]
    t: Optional[int]
    j_final: Optional[int] = None
    ell1: Optional[int] = None
    ell2: Optional[int] = None
    algorithm: str = "param"
    counters: Dict[str, OpCounter] = dc_field(default_factory=lambda: {"basis": OpCounter(), "search": OpCounter()})
    accepted: List[Candidate] = dc_field(default_factory=list)
    distances: List[int] = dc_field(default_factory=list)

    def message_coeffs(self, k: int) -> List[Tuple[Element, ...]]:
        return [tuple(m.padded(k)) for m in self.messages]


def divisibility_check(divisor: LinPoly, dividend: LinPoly, k: int) -> Optional[Message]:
    """
    Return m with dividend = divisor o m and qdeg(m) < k, or None.

    Raises:
        ZeroPolynomialDivisionError: If divisor is zero
    """
    quo, rem = dividend.left_divide(divisor)
    if rem.is_zero() and quo.qdeg < k:
        return quo
    return None


def _coefficient_tuples(field: FieldSpec, length: int) -> Iterable[Tuple[int, ...]]:
    return product(range(field.order), repeat=length)


def _combine(twists: Sequence[ModVec], coeffs: Sequence[Element], acc: ModVec) -> ModVec:
    for c, row in zip(coeffs, twists):
        if c:
            acc = acc + row.scale(c)
    return acc


BetaPart = Tuple[Tuple[int, ...], ModVec]


def _sweep_slice(
    code: CodeSpec,
    basis: Basis2,
    j: int,
    beta_parts: Sequence[BetaPart],
    gamma_slice: Sequence[Tuple[int, ...]],
) -> Tuple[List[Candidate], OpCounter]:
    """Search every beta against the given monic gammas of q-degree j."""
    field = code.field
    counter = OpCounter()
    accepted: List[Candidate] = []
    with counting(counter):
        # Monic gamma: x^{[j]} o b2 plus the lower twists
        twists_b2 = [basis.b2.twist(s) for s in range(j + 1)]
        gamma_parts = [(low, _combine(twists_b2, low, twists_b2[j])) for low in gamma_slice]
        for beta_coeffs, beta_part in beta_parts:
            for gamma_low, gamma_part in gamma_parts:
                f = beta_part + gamma_part
                # Accept when N = D o m with D = -f2
                message = divisibility_check(-f.f2, f.f1, code.k)
                if message is not None:
                    accepted.append(
                        Candidate(
                            f,
                            LinPoly(field, beta_coeffs),
                            LinPoly(field, list(gamma_low) + [1]),
                            message,
                        )
                    )
    return accepted, counter


def _sweep(code: CodeSpec, basis: Basis2, j: int, workers: int) -> Tuple[List[Candidate], OpCounter]:
    """
    One full (beta, gamma) sweep for loop index j.

    The beta combinations are formed once; the gamma space is partitioned
    across worker threads, each with a private counter. Results are merged and
    sorted so neither the outcome nor the tallies depend on the number of workers.
    """
    field = code.field
    beta_len = max(0, int(basis.ell2 - basis.ell1) + j + 1)
    gammas = list(_coefficient_tuples(field, j))
    logger.debug("Sweep j=%d: %d beta x %d gamma", j, field.order ** beta_len, len(gammas))

    counter = OpCounter()
    with counting(counter):
        # Every beta o b1 with qdeg(beta) < beta_len
        twists_b1 = [basis.b1.twist(s) for s in range(beta_len)]
        zero = ModVec.zero(field)
        beta_parts = [(coeffs, _combine(twists_b1, coeffs, zero)) for coeffs in _coefficient_tuples(field, beta_len)]

    if workers <= 1 or len(gammas) < 2:
        accepted, part_counter = _sweep_slice(code, basis, j, beta_parts, gammas)
        counter.merge(part_counter)
    else:
        # Contiguous gamma slices, one per worker
        chunk = -(-len(gammas) // workers)
        slices = [gammas[i:i + chunk] for i in range(0, len(gammas), chunk)]
        accepted = []
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_sweep_slice, code, basis, j, beta_parts, s) for s in slices]
            for future in futures:
                part, part_counter = future.result()
                accepted.extend(part)
                counter.merge(part_counter)
    return _dedupe(code, accepted), counter


def _dedupe(code: CodeSpec, candidates: Iterable[Candidate]) -> List[Candidate]:
    """Keep one candidate per message, ordered by message coefficients."""
    k = code.k
    ordered = sorted(
        candidates,
        key=lambda c: (tuple(c.message.padded(k)), c.beta.coeffs, c.gamma.coeffs),
    )
    seen = set()
    unique = []
    for candidate in ordered:
        key = tuple(candidate.message.padded(k))
        if key not in seen:
            seen.add(key)
            unique.append(candidate)
    return unique


def _build_basis(code: CodeSpec, received: Word, basis_alg: BasisAlgorithm) -> Tuple[Basis2, OpCounter]:
    counter = OpCounter()
    with counting(counter):
        basis = minimal_basis(code.field, code.generators, received, code.k, basis_alg)
    return basis, counter


def decode_closest(
    code: CodeSpec,
    received: Sequence[Element],
    basis_alg: BasisAlgorithm = "eea",
    workers: Optional[int] = None,
    max_distance: Optional[int] = None,
) -> DecodeOutput:
    """
    All messages whose codewords are closest (in rank distance) to ``received``.

    Args:
        code: Gabidulin code
        received: Received word of length n
        basis_alg: 'eea' or 'iterative' minimal-basis construction
        workers: Sweep worker threads (defaults to the configured value)
        max_distance: Give up, returning an empty list, once the next sweep would
            only find codewords farther than this

    Returns:
        DecodeOutput with sorted, deduplicated messages, the achieved distance t
        and the terminating loop index

    Raises:
        DecodingGuardError: If j passes min(m, n) - l2 + k - 1 without a hit
    """
    received = code.check_word(received)
    workers = get_settings().workers if workers is None else workers
    k = code.k
    basis, basis_counter = _build_basis(code, received, basis_alg)
    ell1, ell2 = int(basis.ell1), int(basis.ell2)
    cap = min(code.field.m, code.n) - ell2 + k - 1
    search_counter = OpCounter()
    counters = {"basis": basis_counter, "search": search_counter}

    # Every hit of sweep j lies at rank distance t
    j = 0
    while True:
        t = ell2 + j - k + 1
        if max_distance is not None and t > max_distance:
            return DecodeOutput([], None, None, ell1, ell2, basis_alg, counters)
        if j > cap:
            raise DecodingGuardError(f"Loop index {j} exceeds its bound {cap}; the basis is inconsistent")
        accepted, counter = _sweep(code, basis, j, workers)
        search_counter.merge(counter)
        if accepted:
            break
        j += 1

    logger.debug("Decoded %d message(s) at distance %d (j=%d)", len(accepted), t, j)
    return DecodeOutput(
        messages=[c.message for c in accepted],
        t=t,
        j_final=j,
        ell1=ell1,
        ell2=ell2,
        algorithm=basis_alg,
        counters=counters,
        accepted=accepted,
        distances=[t] * len(accepted),
    )


def decode_within(
    code: CodeSpec,
    received: Sequence[Element],
    radius: int,
    basis_alg: BasisAlgorithm = "eea",
    workers: Optional[int] = None,
) -> DecodeOutput:
    """
    Every message whose codeword lies within rank distance ``radius``, closer
    ones included, by sweeping j = 0, ..., radius - l2 + k - 1 without stopping.

    Raises:
        RankOutOfRangeError: If radius is negative
    """
    if radius < 0:
        raise RankOutOfRangeError(f"Radius must be non-negative, got {radius}")
    received = code.check_word(received)
    workers = get_settings().workers if workers is None else workers
    k = code.k
    basis, basis_counter = _build_basis(code, received, basis_alg)
    ell1, ell2 = int(basis.ell1), int(basis.ell2)
    last_j = min(radius, code.field.m, code.n) - ell2 + k - 1
    search_counter = OpCounter()

    found: List[Candidate] = []
    for j in range(0, last_j + 1):
        accepted, counter = _sweep(code, basis, j, workers)
        search_counter.merge(counter)
        found.extend(accepted)

    accepted = _dedupe(code, found)
    distances = [code.rank_distance(code.encode(c.message), received) for c in accepted]
    return DecodeOutput(
        messages=[c.message for c in accepted],
        t=min(distances) if distances else None,
        j_final=last_j if last_j >= 0 else None,
        ell1=ell1,
        ell2=ell2,
        algorithm=basis_alg,
        counters={"basis": basis_counter, "search": search_counter},
        accepted=accepted,
        distances=distances,
    )


def decode_exhaustive(
    code: CodeSpec,
    received: Sequence[Element],
    radius: Optional[int] = None,
    limit: Optional[int] = None,
) -> DecodeOutput:
    """
    Brute force over all q^{mk} messages.

    Without ``radius`` returns the closest messages; with it, every message
    within the radius.

    Raises:
        EnumerationGuardError: If q^{mk} exceeds the enumeration limit
    """
    received = code.check_word(received)
    field = code.field
    limit = get_settings().exhaustive_limit if limit is None else limit
    total = field.order ** code.k
    if total > limit:
        raise EnumerationGuardError(f"Exhaustive search over {total} messages exceeds limit {limit}")

    counter = OpCounter()
    scored: List[Tuple[int, Tuple[int, ...]]] = []
    with counting(counter):
        rows = code.generator_matrix().rows
        for coeffs in _coefficient_tuples(field, code.k):
            word = [0] * code.n
            for c, row in zip(coeffs, rows):
                if c:
                    word = [field.add(w, field.mul(c, v)) for w, v in zip(word, row)]
            scored.append((code.rank_distance(word, received), coeffs))

    if radius is None:
        best = min(d for d, _ in scored)
        chosen = [(d, c) for d, c in scored if d == best]
    else:
        chosen = [(d, c) for d, c in scored if d <= radius]
    chosen.sort(key=lambda item: item[1])
    return DecodeOutput(
        messages=[LinPoly(field, c) for _, c in chosen],
        t=min((d for d, _ in chosen), default=None),
        algorithm="exhaustive",
        counters={"basis": OpCounter(), "search": counter},
        distances=[d for d, _ in chosen],
    )


def _scale_by_prime(field: FieldSpec, b: int, a: Element) -> Element:
    """b * a for b in the prime field; coordinatewise and not counted."""
    if b == 0 or a == 0:
        return 0
    if b == 1:
        return a
    return field.from_coeffs((b * c) % field.q for c in field.to_coeffs(a))


def partial_errors(code: CodeSpec, rank: int) -> List[Word]:
    """
    All words of rank at most ``rank``, from every factorization
    sum_l b_l * a_l with a_l in GF(q^m) and b_l in GF(q)^n, deduplicated and sorted.
    """
    field = code.field
    n = code.n
    words = set()
    for a in _coefficient_tuples(field, rank):
        for b in product(range(field.q), repeat=rank * n):
            word = [0] * n
            for l in range(rank):
                if a[l]:
                    for j in range(n):
                        word[j] = field.add(word[j], _scale_by_prime(field, b[l * n + j], a[l]))
            words.add(tuple(word))
    return sorted(words)


def decode_chase(
    code: CodeSpec,
    received: Sequence[Element],
    radius: int,
    basis_alg: BasisAlgorithm = "eea",
    limit: Optional[int] = None,
) -> DecodeOutput:
    """
    Chase list decoding: every codeword within rank ``radius`` of ``received``.

    For each partial error e' of rank at most radius - floor((d-1)/2), the word
    r - e' is unique-decoded (parametrization limited to the unique radius);
    failures are skipped.

    Raises:
        RankOutOfRangeError: If radius is negative
        EnumerationGuardError: If the number of partial-error factorizations exceeds the limit
    """
    if radius < 0:
        raise RankOutOfRangeError(f"Radius must be non-negative, got {radius}")
    received = code.check_word(received)
    field = code.field
    limit = get_settings().chase_limit if limit is None else limit
    unique_radius = (code.n - code.k) // 2
    extra = max(0, radius - unique_radius)
    factorizations = field.order ** extra * field.q ** (extra * code.n)
    if factorizations > limit:
        raise EnumerationGuardError(f"Chase enumeration of {factorizations} partial errors exceeds limit {limit}")

    basis_counter = OpCounter()
    search_counter = OpCounter()
    found: Dict[Tuple[int, ...], Tuple[int, Message]] = {}
    for e_prime in partial_errors(code, extra):
        shifted = code.sub_words(received, e_prime)
        out = decode_closest(code, shifted, basis_alg, workers=1, max_distance=unique_radius)
        basis_counter.merge(out.counters["basis"])
        search_counter.merge(out.counters["search"])
        for message in out.messages:
            key = tuple(message.padded(code.k))
            if key in found:
                continue
            distance = code.rank_distance(code.encode(message), received)
            if distance <= radius:
                found[key] = (distance, message)

    keys = sorted(found)
    distances = [found[key][0] for key in keys]
    return DecodeOutput(
        messages=[found[key][1] for key in keys],
        t=min(distances) if distances else None,
        algorithm="chase",
        counters={"basis": basis_counter, "search": search_counter},
        distances=distances,
    )


def op_counters(output: DecodeOutput) -> Dict[str, Dict[str, int]]:
    """Per-phase operation tallies of a decoding run, plus their total."""
    total = OpCounter()
    for counter in output.counters.values():
        total.merge(counter)
    report = {phase: counter.as_dict() for phase, counter in output.counters.items()}
    report["total"] = total.as_dict()
    return report
