"""Exception types shared across the toolkit."""


class ComputationError(Exception):
    """Base class for failures of the symbolic engine."""


class AmbientMismatch(ComputationError):
    """Operands live over different ambient rings."""


class DegreeBoundExceeded(ComputationError):
    """An intermediate polynomial passed the configured degree cap."""

    def __init__(self, degree, cap):
        super().__init__(f"intermediate degree {degree} exceeds cap {cap}")
        self.degree = degree
        self.cap = cap


class CapExceeded(ComputationError):
    """A bounded search (reduction number, nilpotency index) hit its cap."""


class NotLocallyContained(ComputationError):
    """A length was requested for a pair without local containment."""


class NotContainedInMaximal(ComputationError):
    """The ideal is not contained in the maximal ideal at the origin."""


class NotMPrimary(ComputationError):
    """The operation requires an ideal primary to the maximal ideal."""


class WitnessNotFound(ComputationError):
    """No spanning element for the key cyclic quotient could be located."""


class NotAReduction(ComputationError):
    """The supplied ideal is not a reduction (capped search found no r)."""


class NotHomogeneous(ComputationError):
    """The graded computation needs a homogeneous defining ideal."""


class ExactDivisionError(ComputationError):
    """Division that must be exact left a remainder; signals an engine bug."""


class SessionError(Exception):
    """Base class for input-language errors, carrying a source position."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = f"line {line}, col {col}: {message}"
        super().__init__(message)


class SessionSyntaxError(SessionError):
    pass


class UnknownVariable(SessionSyntaxError):
    pass


class NonPrimeChar(SessionSyntaxError):
    pass


class UnknownExample(Exception):
    """Registry lookup for an unknown example id."""


class GoldenMismatch(Exception):
    """A registry run disagreed with its golden values."""

    def __init__(self, diffs):
        self.diffs = diffs
        lines = ", ".join(f"{name}: expected {exp!r}, got {got!r}" for name, exp, got in diffs)
        super().__init__(f"golden mismatch: {lines}")
