"""wittforge: exact invariants of quadratic forms and involutions over Q."""

from .errors import BoundExceeded, DomainError

__all__ = ["BoundExceeded", "DomainError"]
__version__ = "0.1.0"
