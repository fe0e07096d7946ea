"""Shared exception types."""


class InputError(ValueError):
    """Malformed or out-of-contract input (unknown vertex, bad edge, ...)."""


class ResourceLimitError(RuntimeError):
    """A configured size/radius/element cap was exceeded."""


class NotConvexError(InputError):
    """A vertex set fails interval closure; carries a violating triple."""

    def __init__(self, x, z, y):
        self.triple = (x, z, y)
        super().__init__(
            f"not interval-closed: {z!r} lies between {x!r} and {y!r} but is missing"
        )


class PreconditionError(InputError):
    """A decision-procedure precondition (Out-finiteness, connectedness) fails."""


class SearchExhaustedError(RuntimeError):
    """A bounded search ran out of budget before finding a certificate."""


class VerificationError(RuntimeError):
    """A subgroup verification check failed; names the check and a witness."""

    def __init__(self, check, witness, message=""):
        self.check = check
        self.witness = witness
        super().__init__(message or f"check {check!r} failed, witness: {witness!r}")
