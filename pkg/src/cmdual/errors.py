"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` and the CLI exit
status it maps to (2 for input/validation problems, 3 for domain errors).
"""


class CMError(Exception):
    code = "error"
    exit_code = 3


class InvalidInput(CMError, ValueError):
    """Malformed or out-of-range arguments."""

    code = "invalid_input"
    exit_code = 2


class DimensionMismatch(InvalidInput):
    """A class has nonzero coefficients above the stated dimension."""

    code = "dimension_mismatch"


class AmbientOdd(InvalidInput):
    code = "ambient_odd"


class NonProperClass(CMError):
    """The class has a nonzero coefficient on the fundamental class [P^n]."""

    code = "non_proper_class"


class ZeroClass(CMError):
    code = "zero_class"


class DegenerateDual(CMError):
    code = "degenerate_dual"


class InconsistentConstraints(CMError):
    code = "inconsistent_constraints"


class NotDivisible(CMError):
    code = "not_divisible"
