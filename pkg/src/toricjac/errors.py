class InputError(ValueError):
    """Invalid user-supplied data: bad fan, malformed polynomial, class mismatch."""


class InternalError(RuntimeError):
    """A mathematical invariant that must hold for valid inputs was violated."""
