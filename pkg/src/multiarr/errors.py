"""Exception types raised across the package."""


class MultiarrError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(MultiarrError, ValueError):
    pass


class LengthMismatch(MultiarrError, ValueError):
    pass


class DomainError(MultiarrError, ValueError):
    pass


class NotMember(MultiarrError):
    """A derivation that was required to lie in D(A, m) does not."""


class BalancedInput(MultiarrError, ValueError):
    pass


class HypothesisViolation(MultiarrError, ValueError):
    """Parity / congruence / balance preconditions of a closed form fail."""


class CaseNotCovered(MultiarrError):
    """The multiplicity falls outside every case the closed forms handle."""
