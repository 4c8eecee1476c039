"""Exception hierarchy shared by all engine modules."""


class EngineError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(EngineError):
    """Malformed action data; carries the offending row/column when known."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class StructuralError(EngineError):
    """Operands structurally incompatible (e.g. different variable counts)."""


class InhomogeneityError(EngineError):
    """A form expected to be homogeneous mixes two distinct weights."""

    def __init__(self, message, weight_a=None, weight_b=None):
        super().__init__(message)
        self.weight_a = weight_a
        self.weight_b = weight_b


class PreconditionError(EngineError):
    """Input violates the stated precondition of an operation."""


class UnsupportedRouteError(EngineError):
    """The requested criterion does not apply to this kind of action."""


class ResourceLimitError(EngineError):
    """A guard against runaway enumeration tripped."""


class InternalCheckError(EngineError):
    """An internal consistency check failed; indicates an engine bug."""
