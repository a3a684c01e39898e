"""Degree 2 and 3 mod-2 Galois cohomology of Q, in ramification coordinates.

A 2-torsion Brauer class over Q is pinned down by its (finite, even) set of
ramified places, and addition is symmetric difference.  H^3(Q, mu_2) = Z/2
with the real place as the only obstruction, so a degree 3 class is a bit and
the cup product (a) . [Q] has an explicit closed form.
"""

from dataclasses import dataclass
from typing import Iterable

from .config import DEFAULT_LIMITS
from .errors import BoundExceeded, DomainError
from .qarith import (
    REAL,
    Place,
    Rational,
    check_place,
    ramified_places,
    squarefree_part,
)


@dataclass(frozen=True)
class BrauerClass:
    """A class in the 2-torsion of Br(Q), as its set of ramified places."""

    ramified: frozenset[Place]

    def __post_init__(self):
        for v in self.ramified:
            check_place(v)
        if len(self.ramified) % 2:
            raise DomainError(f"odd ramification set {set(self.ramified)}")

    def __add__(self, other: "BrauerClass") -> "BrauerClass":
        return BrauerClass(self.ramified ^ other.ramified)

    def is_zero(self) -> bool:
        return not self.ramified

    def is_ramified_at(self, v: Place) -> bool:
        return check_place(v) in self.ramified

    def sort_key(self):
        return sorted(self.ramified, key=lambda v: (-1, 0) if v == REAL else (0, v))


ZERO = BrauerClass(frozenset())


def brauer_from_symbol(a: Rational, b: Rational) -> BrauerClass:
    """The class of the quaternion symbol (a, b)."""
    return BrauerClass(ramified_places(a, b))


def brauer_sum(classes: Iterable[BrauerClass]) -> BrauerClass:
    total = ZERO
    for c in classes:
        total = total + c
    return total


def _signed_squarefree_by_height(limit: int):
    """1, -1, 2, -2, 3, -3, 5, ... all signed squarefree ints up to limit."""
    for n in range(1, limit + 1):
        if squarefree_part(n) == n:
            yield n
            yield -n


def find_quaternion_symbol(cls: BrauerClass,
                           height_bound: int | None = None) -> tuple[int, int]:
    """A symbol (a, b) representing cls, with signed squarefree entries.

    The first slot is fixed from the ramification set (product of the finite
    ramified primes, negated when the real place appears); the second is found
    by enumeration, which terminates since a matching b exists with prime
    support by Dirichlet.  Entries may involve primes outside the ramified
    set; that is unavoidable for sets like {17, 89}.
    """
    bound = height_bound if height_bound is not None else DEFAULT_LIMITS.height_bound
    if cls.is_zero():
        return (1, 1)
    a = 1
    for v in cls.ramified:
        a *= -1 if v == REAL else v
    for b in _signed_squarefree_by_height(bound):
        if ramified_places(a, b) == cls.ramified:
            return (a, b)
    raise BoundExceeded(
        f"no symbol with |b| <= {bound} for ramification {set(cls.ramified)}")


@dataclass(frozen=True)
class H3Class:
    """An element of H^3(Q, mu_2) = Z/2."""

    bit: int

    def __post_init__(self):
        if self.bit not in (0, 1):
            raise DomainError("H3 classes are bits")

    def __add__(self, other: "H3Class") -> "H3Class":
        return H3Class(self.bit ^ other.bit)

    def is_zero(self) -> bool:
        return self.bit == 0


H3_ZERO = H3Class(0)


def cup_h3(a: Rational, q: BrauerClass) -> H3Class:
    """The cup product (a) . q in H^3(Q, mu_2).

    At every finite place H^3 of the completion vanishes, so the class is the
    real component: nonzero iff a < 0 and q ramifies at the real place.
    """
    s = squarefree_part(a)
    return H3Class(1 if (s < 0 and q.is_ramified_at(REAL)) else 0)
