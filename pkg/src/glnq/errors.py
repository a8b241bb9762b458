"""Exception types shared across the package.

Budget refusals are distinct from invalid input so the CLI can map them to
separate exit codes.
"""


class GlnqError(Exception):
    """Base class for all package errors."""


class InvalidInput(GlnqError):
    """Arguments violate a documented precondition."""


class BudgetExceeded(GlnqError):
    """A computation was refused because it would exceed a size budget."""


# --- input / precondition errors -------------------------------------------

class NotPrimePower(InvalidInput):
    pass


class DegreeOutOfRange(InvalidInput):
    pass


class ZeroInput(InvalidInput):
    pass


class NotInSubfield(InvalidInput):
    pass


class NotIrreducible(InvalidInput):
    pass


class ZeroConstantTerm(InvalidInput):
    pass


class NotMonic(InvalidInput):
    pass


class NormMismatch(InvalidInput):
    pass


class SizeMismatch(InvalidInput):
    pass


class Singular(InvalidInput):
    pass


class HypothesisViolation(InvalidInput):
    pass


class DivisibilityViolation(InvalidInput):
    pass


class RangeError(InvalidInput):
    pass


class InsufficientSamples(InvalidInput):
    pass


class NotRegularSemisimple(InvalidInput):
    pass


class UnsupportedTarget(InvalidInput):
    """Requested count needs character data outside brute-force scale."""


# --- budget refusals ---------------------------------------------------------

class FieldTooLarge(BudgetExceeded):
    pass


class EnumerationTooLarge(BudgetExceeded):
    pass


class GroupTooLarge(BudgetExceeded):
    pass


class TooLarge(BudgetExceeded):
    pass


# --- internal consistency failures (signal implementation bugs) --------------

class InexactDivision(GlnqError):
    """A division that must be exact left a remainder."""


class InexactResult(GlnqError):
    """A closed formula produced a non-integer value."""


class OrthogonalityFailure(GlnqError):
    """A character table failed an orthogonality identity."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotRational(GlnqError):
    """A cyclotomic sum was asked for its rational value but has none."""
