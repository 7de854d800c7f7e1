"""Exception hierarchy and warning categories shared by all modules."""


class BosecritError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(BosecritError):
    """Parameter set cannot be validated (missing or ill-formed members)."""


class InconsistentParameters(ValidationError):
    """Two redundant parameters were both supplied and disagree."""


class NonPhysical(ValidationError):
    """A positivity or range invariant on physical inputs is violated."""


class DomainError(BosecritError):
    """Argument outside the mathematical domain of a special function."""


class ConvergenceError(BosecritError):
    """An iterative scheme stopped before reaching its tolerance.

    The optional ``history`` attribute carries diagnostic iterates
    (e.g. bracket endpoints) for post-mortem inspection.
    """

    def __init__(self, message, history=None):
        super().__init__(message)
        self.history = history


class QuadratureError(BosecritError):
    """An adaptive quadrature failed to reach the requested accuracy."""


class PoleError(BosecritError):
    """Evaluation requested exactly at (or beyond) a pole of a formula."""


class NegativeRadicand(BosecritError):
    """Square-root argument went non-positive in the scale estimate.

    ``critical_density`` is the density at which the radicand crosses zero.
    """

    def __init__(self, message, critical_density=None):
        super().__init__(message)
        self.critical_density = critical_density


class ParseError(BosecritError):
    """Scenario file could not be parsed; ``line`` is the 1-based line number."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line


class IdealGasDivergence(UserWarning):
    """The zero-coupling limit sends the symmetry-breaking temperature to infinity."""
