"""
Exceptions raised by the rank-metric decoding library.

Every error derives from ``ValueError`` as well as ``GabidulinError`` so callers
that only guard against bad input keep working.
"""


class GabidulinError(Exception):
    """Base class for all library errors."""


class FieldParameterError(GabidulinError, ValueError):
    """Non-prime characteristic, bad degree or a field too large to handle."""


class ReducibleModulusError(GabidulinError, ValueError):
    """The requested field modulus is not irreducible over GF(q)."""


class ZeroInversionError(GabidulinError, ZeroDivisionError, ValueError):
    """Attempt to invert the zero element."""


class ZeroPolynomialDivisionError(GabidulinError, ZeroDivisionError, ValueError):
    """Symbolic division by the zero polynomial."""


class DependentElementsError(GabidulinError, ValueError):
    """Elements expected to be GF(q)-linearly independent are not."""


class CodeParameterError(GabidulinError, ValueError):
    """Code length, dimension or generators violate 1 <= k <= n <= m."""


class MessageDegreeError(GabidulinError, ValueError):
    """Message polynomial has q-degree >= k."""


class RankOutOfRangeError(GabidulinError, ValueError):
    """Requested error rank is outside [0, min(m, n)]."""


class EnumerationGuardError(GabidulinError, ValueError):
    """A brute-force oracle would enumerate more candidates than allowed."""


class DecodingGuardError(GabidulinError, RuntimeError):
    """The parametrization loop ran past its theoretical bound."""
