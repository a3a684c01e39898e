"""Exception types shared across the package.

Every operation distinguishes "the input is outside the domain of this map"
(DomainError) from "the answer exists but the search needed to produce a
witness ran past its configured budget" (BoundExceeded).  Callers that want
to treat exhaustion as a soft failure can catch the latter alone.
"""


class DomainError(ValueError):
    """Input violates a precondition of the requested operation."""


class BoundExceeded(RuntimeError):
    """A terminating search exceeded its height or factorization budget."""
