"""Quaternion algebras (a, b) over Q with exact element arithmetic.

Basis 1, i, j, k with i^2 = a, j^2 = b, k = ij = -ji.  Elements carry their
algebra so cross-algebra arithmetic fails loudly.  The reduced norm on pure
quaternions is the diagonal form <-a, -b, ab>, and two pures anticommute
exactly when they are orthogonal for it; that is what the constructive
helpers below exploit.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .cohomology import BrauerClass, brauer_from_symbol, find_quaternion_symbol
from .config import DEFAULT_LIMITS, SearchLimits
from .errors import BoundExceeded, DomainError
from .qarith import Rational, as_fraction, squarefree_part
from .quadform import QuadForm, diagonal, direct_sum, is_isotropic, \
    isotropic_vector, neg, represent_value


@dataclass(frozen=True)
class QuaternionAlgebra:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        af, bf = as_fraction(self.a), as_fraction(self.b)
        if af == 0 or bf == 0:
            raise DomainError("quaternion parameters must be nonzero")
        object.__setattr__(self, "a", af)
        object.__setattr__(self, "b", bf)

    def brauer(self) -> BrauerClass:
        return brauer_from_symbol(self.a, self.b)

    def is_split(self) -> bool:
        return self.brauer().is_zero()

    def norm_form(self) -> QuadForm:
        return diagonal(1, -self.a, -self.b, self.a * self.b)

    def pure_norm_form(self) -> QuadForm:
        return diagonal(-self.a, -self.b, self.a * self.b)

    def element(self, t: Rational, x: Rational, y: Rational, z: Rational) -> "Quat":
        return Quat(self, (as_fraction(t), as_fraction(x),
                           as_fraction(y), as_fraction(z)))

    def one(self) -> "Quat":
        return self.element(1, 0, 0, 0)

    def i(self) -> "Quat":
        return self.element(0, 1, 0, 0)

    def j(self) -> "Quat":
        return self.element(0, 0, 1, 0)

    def k(self) -> "Quat":
        return self.element(0, 0, 0, 1)


def algebra(a: Rational, b: Rational) -> QuaternionAlgebra:
    return QuaternionAlgebra(as_fraction(a), as_fraction(b))


def algebra_from_class(cls: BrauerClass,
                       limits: SearchLimits = DEFAULT_LIMITS) -> QuaternionAlgebra:
    """A quaternion algebra in the given Brauer class."""
    a, b = find_quaternion_symbol(cls, limits.height_bound)
    return algebra(a, b)


@dataclass(frozen=True)
class Quat:
    alg: QuaternionAlgebra
    coeffs: tuple[Fraction, Fraction, Fraction, Fraction]

    def _check(self, other: "Quat") -> None:
        if self.alg != other.alg:
            raise DomainError("elements live in different algebras")

    def __add__(self, other: "Quat") -> "Quat":
        self._check(other)
        return Quat(self.alg, tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Quat") -> "Quat":
        self._check(other)
        return Quat(self.alg, tuple(p - q for p, q in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Quat":
        return Quat(self.alg, tuple(-p for p in self.coeffs))

    def __mul__(self, other) -> "Quat":
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return Quat(self.alg, tuple(c * p for p in self.coeffs))
        self._check(other)
        a, b = self.alg.a, self.alg.b
        t1, x1, y1, z1 = self.coeffs
        t2, x2, y2, z2 = other.coeffs
        return Quat(self.alg, (
            t1 * t2 + a * x1 * x2 + b * y1 * y2 - a * b * z1 * z2,
            t1 * x2 + x1 * t2 - b * y1 * z2 + b * z1 * y2,
            t1 * y2 + y1 * t2 + a * x1 * z2 - a * z1 * x2,
            t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2,
        ))

    __rmul__ = __mul__

    def conjugate(self) -> "Quat":
        t, x, y, z = self.coeffs
        return Quat(self.alg, (t, -x, -y, -z))

    def nrd(self) -> Fraction:
        t, x, y, z = self.coeffs
        a, b = self.alg.a, self.alg.b
        return t * t - a * x * x - b * y * y + a * b * z * z

    def trd(self) -> Fraction:
        return 2 * self.coeffs[0]

    def is_pure(self) -> bool:
        return self.coeffs[0] == 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_invertible(self) -> bool:
        return self.nrd() != 0

    def inverse(self) -> "Quat":
        n = self.nrd()
        if n == 0:
            raise DomainError("element has reduced norm 0")
        return Quat(self.alg, tuple(c / n for c in self.conjugate().coeffs))

    def square_scalar(self) -> Fraction:
        """The rational value of x^2 for pure x (it is -nrd)."""
        if not self.is_pure():
            raise DomainError("element is not pure")
        return -self.nrd()


def pure(alg: QuaternionAlgebra, x: Rational, y: Rational, z: Rational) -> Quat:
    return alg.element(0, x, y, z)


def anticommutant(alg: QuaternionAlgebra, p: Quat,
                  limits: SearchLimits = DEFAULT_LIMITS) -> Quat:
    """An invertible pure u with up = -pu.

    Anticommuting pures form the orthogonal complement of p for the pure norm
    form, a plane carrying at most two isotropic lines; among w1, w2, w1 +- w2
    at least two are invertible.
    """
    if p.alg != alg:
        raise DomainError("element not in the given algebra")
    if not p.is_pure() or not p.is_invertible():
        raise DomainError("need an invertible pure quaternion")
    a, b = alg.a, alg.b
    _, px, py, pz = p.coeffs
    row = [[-a * px, -b * py, a * b * pz]]
    w1, w2 = _linalg.kernel_basis(_linalg.mat(row))
    for coords in (w1, w2,
                   [s + t for s, t in zip(w1, w2)],
                   [s - t for s, t in zip(w1, w2)]):
        u = pure(alg, *coords)
        if u.is_invertible():
            assert (u * p + p * u).is_zero()
            return u
    raise AssertionError(f"no invertible anticommutant for {p}")


def complement_slot(alg: QuaternionAlgebra, a: Rational,
                    witness: Quat | None = None,
                    limits: SearchLimits = DEFAULT_LIMITS) -> int:
    """A signed squarefree b with alg = (a, b), given that some pure element
    squares to a modulo squares.  The witness pure can be supplied to pin
    the choice."""
    if witness is not None:
        j = witness
        if j.alg != alg or not j.is_pure() or j.nrd() == 0:
            raise DomainError("witness must be an invertible pure quaternion")
        if squarefree_part(j.square_scalar()) != squarefree_part(as_fraction(a)):
            raise DomainError("witness square is not in the class of a")
    else:
        try:
            j = pure_with_square(alg, squarefree_part(as_fraction(a)), limits)
        except DomainError:
            raise DomainError(
                f"{a} is not a pure square in ({alg.a}, {alg.b})") from None
    u = anticommutant(alg, j, limits)
    b = squarefree_part(u.square_scalar())
    assert brauer_from_symbol(a, b) == alg.brauer(), (alg, a, b)
    return b


def pure_with_square(alg: QuaternionAlgebra, d0: Rational,
                     limits: SearchLimits = DEFAULT_LIMITS) -> Quat:
    """An exact pure quaternion j with j^2 = d0, when one exists."""
    d0f = as_fraction(d0)
    if d0f == 0:
        raise DomainError("a pure square must be nonzero")
    try:
        coords = represent_value(alg.pure_norm_form(), -d0f, limits)
    except DomainError:
        raise DomainError(
            f"no pure element of ({alg.a}, {alg.b}) squares to {d0f}") from None
    u = pure(alg, *coords)
    assert u.square_scalar() == d0f
    return u


def common_value_witness(h1: QuaternionAlgebra, h2: QuaternionAlgebra,
                         limits: SearchLimits = DEFAULT_LIMITS,
                         ) -> tuple[Quat, Quat] | None:
    """A pair (q in h1, pure j in h2) with nrd(q) = -j^2 != 0, or None.

    The full norm form of h1 and the pure norm form of h2 share a nonzero
    value exactly when their difference, a 7-dimensional form, is isotropic;
    Hasse-Minkowski decides that, so None is a proof of impossibility rather
    than a failed search.  Search exhaustion surfaces as BoundExceeded: the
    question stays open, which callers must keep distinct from None.
    """
    n1 = h1.norm_form()
    n2_pure = h2.pure_norm_form()
    if h2.is_split():
        # pure norms of a split algebra take every value; match nrd(1) = 1
        j = pure(h2, *represent_value(n2_pure, 1, limits))
        q = h1.one()
    elif h1.is_split():
        j = h2.i()
        q = h1.element(*represent_value(n1, n2_pure(j.coeffs[1:]), limits))
    else:
        seven = direct_sum(n1, neg(n2_pure))
        if not is_isotropic(seven):
            return None
        v = isotropic_vector(seven, limits)
        q = h1.element(*v[:4])
        j = pure(h2, *v[4:])
    value = q.nrd()
    assert value == n2_pure(j.coeffs[1:]) and value != 0, (q, j)
    return q, j


def _q3_candidates(alg: QuaternionAlgebra, bound: int):
    for coords in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0),
                   (1, 0, 1), (0, 1, 1), (1, 1, 1)):
        yield pure(alg, *coords)
    for h in range(2, bound + 1):
        for coords in itertools.product(range(-h, h + 1), repeat=3):
            if max(abs(c) for c in coords) == h:
                yield pure(alg, *coords)


def three_pure_product(alg: QuaternionAlgebra, q: Quat,
                       limits: SearchLimits = DEFAULT_LIMITS,
                       ) -> tuple[Quat, Quat, Quat]:
    """Pure invertible q1, q2, q3 with q1 q2 q3 = q.

    For a candidate q3 the elements x with both x and (q q3^-1) x pure form
    a plane; any invertible x in it gives the factorization
    q = (q q3^-1 x)(x^-1)(q3).  The pure norm never vanishes on a whole
    plane, so among the basis vectors and their sums and differences an
    invertible pick exists; the q3 loop is a guard, not a search.
    """
    if q.alg != alg:
        raise DomainError("element not in the given algebra")
    if not q.is_invertible():
        raise DomainError("need an invertible quaternion")
    a, b = alg.a, alg.b
    for q3 in _q3_candidates(alg, limits.height_bound):
        if not q3.is_invertible():
            continue
        m = q * q3.inverse()
        # real part of m * (0,x,y,z) as a linear condition on (x,y,z)
        row = [[a * m.coeffs[1], b * m.coeffs[2], -a * b * m.coeffs[3]]]
        basis = _linalg.kernel_basis(_linalg.mat(row))
        candidates = [tuple(v) for v in basis]
        candidates += [tuple(s + t for s, t in zip(v, w))
                       for v, w in itertools.combinations(basis, 2)]
        candidates += [tuple(s - t for s, t in zip(v, w))
                       for v, w in itertools.combinations(basis, 2)]
        for coords in candidates:
            x = pure(alg, *coords)
            if not x.is_invertible():
                continue
            q1, q2 = m * x, x.inverse()
            assert q1.is_pure() and q1.is_invertible()
            assert (q1 * q2 * q3).coeffs == q.coeffs
            return q1, q2, q3
    raise BoundExceeded("no three-pure factorization within the search bound")


# --- serialization ----------------------------------------------------------

def algebra_to_json(alg: QuaternionAlgebra) -> dict:
    return {"a": str(alg.a), "b": str(alg.b)}


def algebra_from_json(data) -> QuaternionAlgebra:
    if not isinstance(data, dict) or "a" not in data or "b" not in data:
        raise DomainError("an algebra is {\"a\": ..., \"b\": ...}")
    try:
        return QuaternionAlgebra(Fraction(str(data["a"])),
                                 Fraction(str(data["b"])))
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad algebra parameter: {exc}") from None


def elem_to_json(q: Quat) -> dict:
    return {"alg": algebra_to_json(q.alg),
            "coords": [str(c) for c in q.coeffs]}


def elem_from_json(data, expected: QuaternionAlgebra | None = None) -> Quat:
    if not isinstance(data, dict) or "alg" not in data or "coords" not in data:
        raise DomainError("a quaternion is {\"alg\": ..., \"coords\": ...}")
    alg = algebra_from_json(data["alg"])
    if expected is not None and alg != expected:
        raise DomainError("quaternion algebra disagrees with its context")
    coords = data["coords"]
    if not isinstance(coords, list) or len(coords) != 4:
        raise DomainError("coords must be four rationals")
    try:
        coeffs = tuple(Fraction(str(c)) for c in coords)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational in quaternion: {exc}") from None
    return Quat(alg, coeffs)
