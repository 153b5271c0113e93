"""Exception types shared across the library."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(DomainError):
    """Evaluation requested at a pole of the gamma function."""


class UnsupportedAlphaError(DomainError):
    """Closed form requested for a stability index that has none."""


class PreconditionError(ValueError):
    """Structural precondition violated (e.g. factorization parameters)."""


class HypothesisError(PreconditionError):
    """Hypotheses of an inequality are not satisfied."""


class UnreliableScanError(RuntimeError):
    """Too few reliable grid points to classify a scan."""
