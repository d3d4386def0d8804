"""Exception hierarchy shared by every module."""


class ClosureError(Exception):
    """Base class for all library errors."""


class ParseError(ClosureError, ValueError):
    """Malformed ring, polynomial, group or document text."""

    def __init__(self, message, text=None, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.text = text
        self.position = position


class CapabilityError(ClosureError):
    """The requested operation is not supported for this ring or input."""


class GuardError(CapabilityError):
    """A size guard was exceeded; ``limit`` names the guard."""

    def __init__(self, message, limit=None):
        super().__init__(message)
        self.limit = limit


class DimensionError(ClosureError, ValueError):
    """Shapes, ranks or degrees do not match."""


class NotInvertibleError(ClosureError, ArithmeticError):
    """Inversion of a non-unit."""


class DivisibilityError(ClosureError, ArithmeticError):
    """An exact division left a nonzero remainder."""


class NotInvariantError(ClosureError, ValueError):
    """A tensor is not fixed by the group; carries a violating pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class HomomorphismError(ClosureError, ValueError):
    """A proposed map violates a homomorphism law."""


class NotAClosureDatum(ClosureError, ValueError):
    """Closure-datum verification failed; ``law`` and ``where`` say how."""

    def __init__(self, message, law=None, where=None):
        super().__init__(message)
        self.law = law
        self.where = where


class ConsistencyError(ClosureError, AssertionError):
    """Two independent computations disagreed (indicates a bug)."""


class HypothesisError(CapabilityError):
    """A construction was refused because its mathematical precondition fails."""
