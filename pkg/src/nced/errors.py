"""Exception types raised by the public API."""


class NcedError(Exception):
    """Base class for all package errors."""


class NotUnitError(NcedError):
    """Candidate Lorentz element is too far from unit norm."""


class NotAntisymmetricError(NcedError):
    """Noncommutativity matrix is not antisymmetric."""


class ZeroKError(NcedError):
    """Noncommutativity vector is zero: the stabilizer is the full group."""


class KindMismatchError(NcedError):
    """Group parameter does not match the descriptor kind."""


class DegenerateError(NcedError):
    """A factorization or reduction lost its invariants upstream."""


class InconsistentInputError(NcedError):
    """Field state does not satisfy the constitutive relations."""


class InputFormatError(NcedError):
    """Analysis input file is malformed."""
