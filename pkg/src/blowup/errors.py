"""Exception hierarchy shared by all blowup modules.

The CLI maps these onto process exit codes: ParseError -> 2,
CapacityError -> 4, everything else derived from BlowupError -> 3.
"""


class BlowupError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BlowupError):
    """Malformed textual or binary input (edge lists, graph6, JSON)."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)
        self.offset = offset


class ValidationError(BlowupError):
    """An invariant required by an operation does not hold."""


class DisconnectedGraphError(ValidationError):
    """A metric-dependent operation received a disconnected graph."""


class CapacityError(BlowupError):
    """Input size exceeds a documented exponential-cost cap."""


class RecoveryError(BlowupError):
    """A polynomial does not come from any graph metric."""
