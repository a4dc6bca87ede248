"""Exception types shared across the package."""


class CtLcsError(ValueError):
    """Base class for input errors raised by this package."""


class EmptySequenceError(CtLcsError):
    pass


class NotNormalizedError(CtLcsError):
    pass


class NonBinaryError(CtLcsError):
    pass


class CapExceededError(CtLcsError):
    """Input is longer than the configured size cap of an algorithm."""

    def __init__(self, what, size, cap):
        super().__init__(f"{what}: input length {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class ConsistencyError(RuntimeError):
    """Internal tables or a reconstructed witness failed a self-check."""
