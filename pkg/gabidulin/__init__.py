"""Gabidulin codes over GF(q^m) with minimal list decoding."""

from .codes import CodeSpec
from .decoder import DecodeOutput, decode_chase, decode_closest, decode_exhaustive, decode_within, op_counters
from .field import FieldSpec, field_new
from .interpolation import minimal_basis
from .linpoly import LinPoly
from .service import DecodingService

__all__ = [
    'CodeSpec',
    'DecodeOutput',
    'DecodingService',
    'FieldSpec',
    'LinPoly',
    'decode_chase',
    'decode_closest',
    'decode_exhaustive',
    'decode_within',
    'field_new',
    'minimal_basis',
    'op_counters',
]
