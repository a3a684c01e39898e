"""Search budgets.

Heights are measured on integers after clearing denominators, so the bounds
below are plain ints.  The environment variable WITTFORGE_SEARCH_BOUND
overrides the witness height bound without touching call sites.
"""

import os
from dataclasses import dataclass


def _env_height_bound(default: int = 10**4) -> int:
    raw = os.environ.get("WITTFORGE_SEARCH_BOUND")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


@dataclass(frozen=True)
class SearchLimits:
    """Budgets for the constructive searches.

    height_bound caps the sup-norm of candidate vectors in isotropy and
    representation searches; factor_bound caps trial division.  Both searches
    raise BoundExceeded rather than silently returning "no".
    """

    height_bound: int = _env_height_bound()
    factor_bound: int = 10**6


DEFAULT_LIMITS = SearchLimits()
