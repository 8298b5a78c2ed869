"""GF(q) linear algebra on field elements viewed as coordinate vectors."""

from __future__ import annotations

from typing import List, Sequence

import galois
import numpy as np

from .field import Element, FieldSpec


def gf2_rank(rows: Sequence[int], n_cols: int) -> int:
    """Rank over GF(2) of rows given as int bitsets, via Gaussian elimination."""
    work = list(rows)
    rank = 0
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank


def gfq_rank(rows: Sequence[Sequence[int]], q: int) -> int:
    """Rank over the prime field GF(q) of rows given as digit lists, via Gaussian elimination."""
    work = [list(row) for row in rows]
    if not work:
        return 0
    rank = 0
    for col in range(len(work[0])):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col] % q:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], q - 2, q)
        pivot_row = [(x * inv) % q for x in work[rank]]
        work[rank] = pivot_row
        # clear the column below the pivot
        for r in range(rank + 1, len(work)):
            factor = work[r][col] % q
            if factor:
                work[r] = [(x - factor * p) % q for x, p in zip(work[r], pivot_row)]
        rank += 1
        if rank == len(work):
            break
    return rank


def coordinate_matrix(field: FieldSpec, elements: Sequence[Element]) -> galois.FieldArray:
    """Matrix over GF(q) whose rows are the coordinates of ``elements``."""
    gf = galois.GF(field.q)
    if not elements:
        return gf(np.zeros((0, field.m), dtype=int))
    return gf(np.array([field.to_coeffs(e) for e in elements], dtype=int))


def rank(field: FieldSpec, elements: Sequence[Element]) -> int:
    """Dimension of the GF(q)-span of ``elements``."""
    if field.q == 2:
        return gf2_rank([e for e in elements if e], field.m)
    nonzero = [e for e in elements if e]
    if not nonzero:
        return 0
    return gfq_rank([field.to_coeffs(e) for e in nonzero], field.q)


def row_space_basis(field: FieldSpec, elements: Sequence[Element]) -> List[Element]:
    """
    Reduced echelon basis of the GF(q)-span of ``elements``.

    Pivots appear in ascending coordinate order, so the result is deterministic
    for a given span.
    """
    nonzero = [e for e in elements if e]
    if not nonzero:
        return []
    reduced = coordinate_matrix(field, nonzero).row_reduce()
    basis = []
    for row in np.asarray(reduced, dtype=int):
        if row.any():
            basis.append(field.from_coeffs(int(c) for c in row))
    return basis


def kernel_basis(field: FieldSpec, images: Sequence[Element]) -> List[Element]:
    """
    Kernel of the GF(q)-linear map sending the j-th polynomial basis vector
    alpha^j to ``images[j]``, returned as field elements.
    """
    matrix = coordinate_matrix(field, list(images))
    null = matrix.T.null_space()
    kernel = [field.from_coeffs(int(c) for c in row) for row in np.asarray(null, dtype=int)]
    return row_space_basis(field, kernel)
