"""Exception types shared across the package."""


class CordialError(ValueError):
    """Base class for every error raised by this package."""


class NotBipartite(CordialError):
    pass


class NonBijective(CordialError):
    pass


class SizeMismatch(CordialError):
    pass


class PropertyViolation(CordialError):
    """A structure fails one of the congruence/balance/multiplicativity checks."""

    def __init__(self, prop, structure=None, detail=""):
        self.prop = prop
        self.structure = structure
        msg = f"{prop} fails"
        if structure is not None:
            msg += f" for {structure}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class HypothesisFailure(CordialError):
    """Parameters fall outside a construction's hypotheses."""


class LimitExceeded(CordialError):
    pass


class ParseError(CordialError):
    def __init__(self, message, position, expected=()):
        self.position = position
        self.expected = tuple(expected)
        full = f"{message} at position {position}"
        if self.expected:
            full += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(full)
