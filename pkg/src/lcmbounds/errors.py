"""Exception types shared across the package."""


class IntegrityError(RuntimeError):
    """An arithmetic identity that must always hold was violated.

    Raising this means the library found a counterexample to one of its
    own foundational facts; it is a reportable finding, never an
    expected runtime condition.
    """


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured size budget."""
