"""Shared exception types."""


class InternalInconsistencyError(RuntimeError):
    """A structural invariant failed; results cannot be trusted."""
