"""Exceptions shared across the package."""


class ShapeError(ValueError):
    """An argument violates a documented precondition (dimensions, labels, kind)."""


class SizeGuardError(RuntimeError):
    """An input exceeds a size guard for an exponential-cost operation.

    Guards exist so that a desk-scale tool fails loudly instead of hanging.
    Every guarded operation takes a ``force`` flag that lifts the guard.
    """
