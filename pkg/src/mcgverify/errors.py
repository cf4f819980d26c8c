"""Exception types shared across the package."""


class McgVerifyError(Exception):
    """Base class for all package errors."""


class ConjugacyMismatch(McgVerifyError):
    """find_conjugators was called on a pair that is not conjugate."""


class GenusMismatch(McgVerifyError):
    """Automorphisms of different genera were combined."""


class ValidationFailure(McgVerifyError):
    """A derived generator formula failed its validation suite.

    The message names the first relation that failed, so a wrong formula
    is rejected with a pointer to the offending identity.
    """


class DeterminantOutOfRange(McgVerifyError):
    """A homology matrix has determinant outside {+1, -1}."""


class OutOfRange(McgVerifyError):
    """Genus outside the valid range of the decomposition arithmetic."""


class BudgetExceeded(McgVerifyError):
    """A bounded search ran out of budget; the result is inconclusive,
    never silently wrong."""


class UnknownClaim(McgVerifyError):
    """Claim id not present in the catalog."""
