"""Exception hierarchy shared across the package.

Three failure classes matter to callers (and map to CLI exit codes):
invalid input data, blowing a configured resource cap, and internal
structural inconsistencies that indicate a bug or a corrupted rank oracle.
"""


class InputError(ValueError):
    """Invalid user-supplied data (non-prime modulus, bad matrix shape, ...)."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured enumeration/size cap."""

    def __init__(self, message, required=None, cap=None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class StructuralError(RuntimeError):
    """An internal cross-check failed; signals a bug or an invalid rank oracle."""
