"""Shared exception for broken internal invariants.

Everything else raises ordinary ``ValueError`` subclasses defined next to
the code whose contract they belong to; ``InternalError`` is reserved for
states that a correct build can never reach (the CLI maps it to exit 3).
"""


class InternalError(RuntimeError):
    """A toolkit invariant failed; indicates a bug, not bad input."""
