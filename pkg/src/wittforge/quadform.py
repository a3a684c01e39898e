"""Regular diagonal quadratic forms over Q and their classifying invariants.

Forms are kept diagonal throughout: every operation that produces a form
rediagonalizes exactly over Fraction.  The classifying data over Q is
(dim, signed discriminant, Hasse class, signature), and the degree 1..3
cohomological invariants e1, e2, e3 are derived from it.  All searches
(isotropic vectors, represented values) return exact witnesses or raise
BoundExceeded; nothing here is approximate.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt
from typing import Iterable, Sequence

from .cohomology import (ZERO, BrauerClass, H3Class, _signed_squarefree_by_height,
                         brauer_from_symbol, find_quaternion_symbol)
from .config import DEFAULT_LIMITS, SearchLimits
from .errors import BoundExceeded, DomainError
from .qarith import (
    REAL,
    Rational,
    as_fraction,
    factor,
    hilbert_symbol,
    is_local_square,
    is_square,
    sqrt_mod_squarefree,
    square_class_product,
    squarefree_part,
)


@dataclass(frozen=True)
class QuadForm:
    """A regular diagonal form <d1, ..., dn>, entries nonzero rationals."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        coerced = tuple(as_fraction(e) for e in self.entries)
        for e in coerced:
            if e == 0:
                raise DomainError("diagonal entries must be nonzero")
        object.__setattr__(self, "entries", coerced)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __call__(self, v: Sequence[Rational]) -> Fraction:
        if len(v) != self.dim:
            raise DomainError(f"vector length {len(v)} != dim {self.dim}")
        return sum((e * as_fraction(x) ** 2 for e, x in zip(self.entries, v)),
                   Fraction(0))

    def bilinear(self, v: Sequence[Rational], w: Sequence[Rational]) -> Fraction:
        return sum((e * as_fraction(x) * as_fraction(y)
                    for e, x, y in zip(self.entries, v, w)), Fraction(0))


def diagonal(*entries: Rational) -> QuadForm:
    return QuadForm(tuple(as_fraction(e) for e in entries))


def direct_sum(*forms: QuadForm) -> QuadForm:
    out: tuple[Fraction, ...] = ()
    for q in forms:
        out += q.entries
    return QuadForm(out)


def scale(c: Rational, q: QuadForm) -> QuadForm:
    cf = as_fraction(c)
    if cf == 0:
        raise DomainError("scaling by zero destroys regularity")
    return QuadForm(tuple(cf * e for e in q.entries))


def neg(q: QuadForm) -> QuadForm:
    return scale(-1, q)


def tensor(q1: QuadForm, q2: QuadForm) -> QuadForm:
    return QuadForm(tuple(a * b for a in q1.entries for b in q2.entries))


def pfister(*slots: Rational) -> QuadForm:
    """The Pfister form <<a1, ..., ak>> = <1, -a1> x ... x <1, -ak>."""
    out = diagonal(1)
    for a in slots:
        out = tensor(out, diagonal(1, -as_fraction(a)))
    return out


def hyperbolic(m: int = 1) -> QuadForm:
    return QuadForm((Fraction(1), Fraction(-1)) * m)


# --- invariants -----------------------------------------------------------

def det_class(q: QuadForm) -> int:
    # factored entry by entry: the product can be far beyond the trial
    # division budget even when every entry is within it
    return square_class_product(*q.entries) if q.dim else 1


def e1(q: QuadForm) -> int:
    """Signed discriminant (-1)^(n(n-1)/2) det, as a signed squarefree int."""
    n = q.dim
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    if n == 0:
        return 1
    return sign * det_class(q)


def signature(q: QuadForm) -> int:
    return sum(1 if e > 0 else -1 for e in q.entries)


def hasse_class(q: QuadForm) -> BrauerClass:
    """Hasse-Witt invariant, packaged as a Brauer class."""
    total = ZERO
    for a, b in combinations(q.entries, 2):
        total = total + brauer_from_symbol(a, b)
    return total


def _clifford_correction(dim: int, det: int) -> BrauerClass:
    n = dim % 8
    if n in (3, 4):
        return brauer_from_symbol(-1, -det)
    if n in (5, 6):
        return brauer_from_symbol(-1, -1)
    if n in (7, 0) and dim > 0:
        return brauer_from_symbol(-1, det)
    return ZERO


def clifford_class(q: QuadForm) -> BrauerClass:
    """The Clifford (Witt) invariant: the Hasse class with the dimension
    correction, constant on Witt classes.

    The correction uses the determinant class d, not the signed discriminant;
    pinned by C0(<1,1,1>) = (-1,-1) and C(<1,1,1,-1>) split.
    """
    return hasse_class(q) + _clifford_correction(q.dim, det_class(q))


def e2(q: QuadForm) -> BrauerClass:
    if q.dim % 2:
        raise DomainError("e2 wants an even-dimensional form")
    return clifford_class(q)


def e3(q: QuadForm) -> H3Class:
    """Degree 3 invariant of a form in I^3, as its real-place component."""
    if q.dim % 2 or e1(q) != 1 or not e2(q).is_zero():
        raise DomainError("e3 wants a form in I^3 (even dim, trivial e1, e2)")
    sig = signature(q)
    assert sig % 8 == 0, q
    return H3Class((sig // 8) % 2)


# --- isotropy over Q ------------------------------------------------------

def _support_places(q: QuadForm) -> list:
    primes = {2}
    for e in q.entries:
        for p, _ in factor(abs(e.numerator)):
            primes.add(p)
        for p, _ in factor(e.denominator):
            primes.add(p)
    return [REAL] + sorted(primes)


def _local_hasse(q: QuadForm, v) -> int:
    eps = 1
    for a, b in combinations(q.entries, 2):
        eps *= hilbert_symbol(a, b, v)
    return eps


def is_isotropic(q: QuadForm) -> bool:
    """Whether q represents 0 nontrivially over Q (Hasse-Minkowski)."""
    n = q.dim
    if n <= 1:
        return False
    if n == 2:
        return is_square(-q.entries[0] * q.entries[1])
    if n >= 5:
        return abs(signature(q)) < n
    d = det_class(q)
    for v in _support_places(q):
        eps = _local_hasse(q, v)
        if n == 3:
            if hilbert_symbol(-1, -d, v) != eps:
                return False
        else:
            if is_local_square(d, v) and eps != hilbert_symbol(-1, -1, v):
                return False
    return True


def is_anisotropic(q: QuadForm) -> bool:
    return not is_isotropic(q)


def _sqrt_fraction(f: Fraction) -> Fraction:
    rn, rd = isqrt(f.numerator), isqrt(f.denominator)
    assert rn * rn == f.numerator and rd * rd == f.denominator, f
    return Fraction(rn, rd)


def _primitive(v: Iterable[Fraction]) -> tuple[int, ...]:
    vs = list(v)
    lcm = 1
    for x in vs:
        lcm = lcm * x.denominator // gcd(lcm, x.denominator)
    ints = [int(x * lcm) for x in vs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def _shells(bound: int):
    """(x, y) integer pairs ordered by sup-norm shell, x >= 0, not both 0."""
    for h in range(1, bound + 1):
        for x in range(0, h + 1):
            for y in range(-h, h + 1):
                if max(x, abs(y)) == h:
                    yield x, y


def _pair_shortcut(s: list[int]) -> tuple[int, ...] | None:
    for i, j in combinations(range(len(s)), 2):
        w2 = -s[i] * s[j]
        if w2 > 0:
            w = isqrt(w2)
            if w * w == w2:
                v = [0] * len(s)
                v[i], v[j] = abs(s[j]), w
                return tuple(v)
    return None


def _lagrange_descent(a: int, b: int, limits: SearchLimits,
                      ) -> tuple[int, int, int]:
    """A nonzero integer solution of x^2 = a y^2 + b z^2.

    a, b are squarefree and the equation is assumed solvable.  Classical
    descent: a square root t of a mod |b| factors t^2 - a = b b' w^2 with
    |b'| < |b|, and a solution for (a, b') combines with t to one for
    (a, b).  The modulus at least halves each round, so the recursion
    bottoms out in small brute-forceable pairs after O(log) steps.
    """
    if abs(a) > abs(b):
        x, z, y = _lagrange_descent(b, a, limits)
        return x, y, z
    if a == 1:
        return 1, 1, 0
    if b == 1:
        return 1, 0, 1
    assert a < 0 or b < 0 or a > 1  # (-1, -1) style pairs are unsolvable
    if abs(b) <= 16:
        for y, z in _shells(64):
            x2 = a * y * y + b * z * z
            if x2 >= 0:
                x = isqrt(x2)
                if x * x == x2:
                    return x, y, z
        raise DomainError(f"x^2 = {a} y^2 + {b} z^2 has no rational point")
    t = sqrt_mod_squarefree(a % abs(b), abs(b), limits.factor_bound)
    if 2 * t > abs(b):
        t -= abs(b)
    k, r = divmod(t * t - a, b)
    assert r == 0, (a, b, t)
    if k == 0:
        return t, 1, 0
    b2 = squarefree_part(k)
    w = isqrt(k // b2)
    x2, y2, z2 = _lagrange_descent(a, b2, limits)
    # (x2 t + a y2)^2 - a (x2 + t y2)^2 = (t^2 - a)(x2^2 - a y2^2)
    x3, y3, z3 = x2 * t + a * y2, x2 + t * y2, b2 * w * z2
    g = gcd(gcd(abs(x3), abs(y3)), abs(z3))
    return x3 // g, y3 // g, z3 // g


def _ternary_zero(s: list[int], limits: SearchLimits) -> tuple[int, ...]:
    # scale by -s2: (-s0 s2) x^2 + (-s1 s2) y^2 = (s2 z)^2
    big_a, big_b = -s[0] * s[2], -s[1] * s[2]
    al = squarefree_part(big_a)
    be = squarefree_part(big_b)
    u = isqrt(big_a // al)
    v = isqrt(big_b // be)
    x, y, z = _lagrange_descent(al, be, limits)
    out = _primitive((Fraction(y, u), Fraction(z, v), Fraction(x, s[2])))
    assert any(out) and sum(c * t * t for c, t in zip(s, out)) == 0, (s, out)
    return out


def _int_isotropic(s: list[int], limits: SearchLimits) -> tuple[int, ...]:
    """An isotropic integer vector for the signed squarefree diagonal s.

    Caller guarantees isotropy; ternary instances go through the descent
    solver and longer diagonals reduce to it by splitting off a common
    represented value, a search that terminates at small height.
    """
    short = _pair_shortcut(s)
    if short is not None:
        return short
    n = len(s)
    assert n >= 3, s
    if n == 3:
        return _ternary_zero(s, limits)
    rest = QuadForm(tuple(Fraction(x) for x in s[2:]))
    if is_isotropic(rest):
        sub = _int_isotropic(list(s[2:]), limits)
        return (0, 0) + sub
    # both halves anisotropic: find a square class c represented by
    # <s0, s1> and by -rest, then stitch the two exact witnesses.  The
    # screening is place by place: <s0, s1> represents c iff the symbol
    # (-s0 s1, c)_v agrees with (s0, s1)_v everywhere, and rest + <c> is
    # handled by the rank 3 and 4 local criteria, rank >= 5 being
    # isotropic at every finite place already.  Away from the listed
    # places both sides of each comparison are 1, so dict misses pass.
    u01 = square_class_product(s[0], s[1])
    fixed = {REAL, 2}
    for e in s:
        fixed.update(p for p, _ in factor(abs(e)))
    h01 = {v: hilbert_symbol(s[0], s[1], v) for v in fixed}
    m = n - 1  # rank of rest + <c>
    if m == 3:
        u23 = square_class_product(s[2], s[3])
        h23 = {v: hilbert_symbol(s[2], s[3], v) for v in fixed}
    elif m == 4:
        det_r = square_class_product(*s[2:])
        hasse_r = {v: _local_hasse(rest, v) for v in fixed}
        m11 = {v: hilbert_symbol(-1, -1, v) for v in fixed}
    definite = 1 if min(s[2:]) > 0 else -1 if max(s[2:]) < 0 else 0
    for c in _signed_squarefree_by_height(limits.height_bound):
        if definite and (c > 0) == (definite > 0):
            continue
        vs = fixed.union(p for p, _ in factor(abs(c)))
        if any(hilbert_symbol(-u01, c, v) != h01.get(v, 1) for v in vs):
            continue
        if m == 3:
            if any(hilbert_symbol(-u23, -c, v) != h23.get(v, 1) for v in vs):
                continue
        elif m == 4:
            dc = square_class_product(det_r, c)
            if any(is_local_square(dc, v)
                   and hasse_r.get(v, 1) * hilbert_symbol(det_r, c, v)
                   != m11.get(v, 1)
                   for v in vs):
                continue
        x, y, w = _ternary_zero([s[0], s[1], -c], limits)
        assert w != 0, (s, c)  # the binary part is anisotropic
        ext = list(s[2:]) + [c]
        sub = _int_isotropic(ext, limits)
        t = sub[-1]
        assert t != 0, (s, c, sub)  # as is rest
        full = ([Fraction(x * t, w), Fraction(y * t, w)]
                + [Fraction(z) for z in sub[:-1]])
        return _primitive(full)
    raise BoundExceeded(f"no splitting value of height <= {limits.height_bound}")


def isotropic_vector(q: QuadForm,
                     limits: SearchLimits = DEFAULT_LIMITS) -> tuple[Fraction, ...]:
    """An exact nonzero vector with q(v) = 0, primitive integral entries."""
    if q.dim == 0 or not is_isotropic(q):
        raise DomainError("form is anisotropic over Q")
    s = [squarefree_part(e) for e in q.entries]
    t = [_sqrt_fraction(e / sf) for e, sf in zip(q.entries, s)]
    y = _int_isotropic(s, limits)
    v = _primitive(Fraction(yi) / ti for yi, ti in zip(y, t))
    out = tuple(Fraction(x) for x in v)
    assert q(out) == 0 and any(out), (q, out)
    return out


def represents(q: QuadForm, c: Rational) -> bool:
    cf = as_fraction(c)
    if cf == 0:
        raise DomainError("representation of 0 is isotropy; use is_isotropic")
    return is_isotropic(direct_sum(q, diagonal(-cf)))


def represent_value(q: QuadForm, c: Rational,
                    limits: SearchLimits = DEFAULT_LIMITS) -> tuple[Fraction, ...]:
    """An exact vector with q(v) = c."""
    cf = as_fraction(c)
    if not represents(q, cf):
        raise DomainError(f"form does not represent {cf}")
    v = isotropic_vector(direct_sum(q, diagonal(-cf)), limits)
    t = v[-1]
    if t != 0:
        out = tuple(x / t for x in v[:-1])
    else:
        # v[:n] is a zero of q itself; slide along a hyperbolic direction
        w = v[:-1]
        k = next(i for i, x in enumerate(w) if x != 0)
        dk = q.entries[k]
        b = dk * w[k]                      # B(w, e_k), nonzero
        x = (cf - dk) / (2 * b)            # q(x w + e_k) = 2 x b + dk
        out = tuple(x * wi + (1 if i == k else 0) for i, wi in enumerate(w))
    assert q(out) == cf, (q, cf, out)
    return out


# --- Witt decomposition ---------------------------------------------------

@dataclass(frozen=True)
class WittClass:
    """Anisotropic kernel plus Witt index.  Equality compares kernels only,
    which is equality in the Witt ring."""

    kernel: QuadForm
    index: int

    @property
    def total_dim(self) -> int:
        return self.kernel.dim + 2 * self.index

    def __eq__(self, other) -> bool:
        if not isinstance(other, WittClass):
            return NotImplemented
        return isometric(self.kernel, other.kernel)

    def __hash__(self):
        return hash((self.kernel.dim, e1(self.kernel), signature(self.kernel)))


def _accepted(k: QuadForm, d: int, c: BrauerClass, sig: int,
              ) -> QuadForm | None:
    ok = (e1(k) == d and clifford_class(k) == c and signature(k) == sig
          and not is_isotropic(k))
    return k if ok else None


def _peel_unit(dim0: int, d: int, c: BrauerClass, x: int,
               ) -> tuple[int, BrauerClass]:
    """Invariants (e1, Clifford) of k with <x> + k carrying (d, c) in
    dimension dim0."""
    det = d if (dim0 * (dim0 - 1) // 2) % 2 == 0 else -d
    det2 = square_class_product(det, x)
    d2 = det2 if ((dim0 - 1) * (dim0 - 2) // 2) % 2 == 0 else -det2
    c2 = (c + _clifford_correction(dim0, det) + brauer_from_symbol(x, det2)
          + _clifford_correction(dim0 - 1, det2))
    return d2, c2


def _binary_rep(d: int, c: BrauerClass, sig: int,
                limits: SearchLimits) -> QuadForm | None:
    # <a, -ad> has e1 = d and Clifford invariant (a, d); anisotropy is
    # d != 1, and the sign of d is pinned by the signature
    if d == 1 or (sig == 0) != (d > 0):
        return None
    if any(is_local_square(d, v) for v in c.ramified):
        return None
    for a in _signed_squarefree_by_height(limits.height_bound):
        if brauer_from_symbol(a, d) == c:
            got = _accepted(diagonal(a, square_class_product(-1, a, d)),
                            d, c, sig)
            if got is not None:
                return got
    return None


def _ternary_rep(d: int, c: BrauerClass, sig: int,
                 limits: SearchLimits) -> QuadForm | None:
    # <-d> times a pure quaternion norm; the shift is the d-dependent
    # part of the Clifford invariant of that scaling
    shift = clifford_class(scale(-d, diagonal(-1, -1, 1)))
    q_cls = c + shift
    if q_cls.is_zero():
        return None
    al, be = find_quaternion_symbol(q_cls, limits.height_bound)
    k = scale(-d, diagonal(-al, -be, al * be))
    return _accepted(k, d, c, sig)


def _quaternary_rep(d: int, c: BrauerClass, sig: int,
                    limits: SearchLimits) -> QuadForm | None:
    # indefinite quaternaries must be anisotropic at some finite place:
    # trivial local discriminant and nonsplit local Clifford class there
    if abs(sig) != 4 and not any(v != REAL and is_local_square(d, v)
                                 for v in c.ramified):
        return None
    for x in _signed_squarefree_by_height(limits.height_bound):
        d3, c3 = _peel_unit(4, d, c, x)
        k3 = _ternary_rep(d3, c3, sig - (1 if x > 0 else -1), limits)
        if k3 is None:
            continue
        got = _accepted(direct_sum(diagonal(x), k3), d, c, sig)
        if got is not None:
            return got
    return None


def _anisotropic_rep(dim0: int, d: int, c: BrauerClass, sig: int,
                     limits: SearchLimits) -> QuadForm | None:
    """A small-entry anisotropic form with the given invariants, if one
    exists at this dimension.  None is only a statement about dim0."""
    if abs(sig) > dim0 or (dim0 - sig) % 2:
        return None
    if dim0 == 0:
        return diagonal() if d == 1 and c.is_zero() and sig == 0 else None
    if dim0 == 1:
        return _accepted(diagonal(d), d, c, sig)
    if dim0 == 2:
        return _binary_rep(d, c, sig, limits)
    if dim0 == 3:
        return _ternary_rep(d, c, sig, limits)
    if dim0 == 4:
        return _quaternary_rep(d, c, sig, limits)
    if abs(sig) != dim0:
        # an indefinite form in five or more variables is isotropic
        return None
    eps = 1 if sig > 0 else -1
    d2, c2 = _peel_unit(dim0, d, c, eps)
    sub = _anisotropic_rep(dim0 - 1, d2, c2, sig - eps, limits)
    if sub is None:
        return None
    return _accepted(direct_sum(diagonal(eps), sub), d, c, sig)


def witt_decompose(q: QuadForm,
                   limits: SearchLimits = DEFAULT_LIMITS) -> WittClass:
    """q = (anisotropic kernel) + index * (hyperbolic plane).

    The kernel is rebuilt from (e1, Clifford, signature), which classify
    Witt classes over Q, rather than peeled off vector by vector; the
    smallest dimension admitting an anisotropic form with the right
    invariants wins, and the result is verified before it is returned.
    """
    if q.dim == 0:
        return WittClass(q, 0)
    d, c, sig = e1(q), clifford_class(q), signature(q)
    start = abs(sig) if (abs(sig) - q.dim) % 2 == 0 else abs(sig) + 1
    for dim0 in range(start, q.dim + 1, 2):
        kernel = _anisotropic_rep(dim0, d, c, sig, limits)
        if kernel is not None:
            return WittClass(kernel, (q.dim - dim0) // 2)
    raise BoundExceeded("no anisotropic kernel found; the search caps in "
                        "the representative constructors are too low")


# --- classification -------------------------------------------------------

def isometric(q1: QuadForm, q2: QuadForm) -> bool:
    """Isometry over Q: dimension, signed discriminant, Hasse class and
    signature settle it."""
    return (q1.dim == q2.dim
            and e1(q1) == e1(q2)
            and signature(q1) == signature(q2)
            and hasse_class(q1) == hasse_class(q2))


def is_hyperbolic(q: QuadForm) -> bool:
    return (q.dim % 2 == 0 and e1(q) == 1 and signature(q) == 0
            and clifford_class(q).is_zero())


def witt_equivalent(q1: QuadForm, q2: QuadForm) -> bool:
    return is_hyperbolic(direct_sum(q1, neg(q2)))


# --- behaviour over a quadratic extension ---------------------------------

def is_hyperbolic_over(q: QuadForm, d: Rational) -> bool:
    """Whether q becomes hyperbolic over Q(sqrt d), decided place by place.

    No arithmetic in the extension: the Clifford class of the extended form
    is the restriction, which dies at exactly the ramified places where d
    stays a nonsquare locally.
    """
    sd = squarefree_part(d)
    if sd == 1:
        raise DomainError("d must be a nonsquare")
    if q.dim % 2:
        raise DomainError("odd-dimensional forms are never hyperbolic")
    if q.dim == 0:
        return True
    disc = e1(q)
    if disc != 1 and disc != sd:
        return False
    if sd > 0 and signature(q) != 0:
        return False
    for v in clifford_class(q).ramified:
        if v == REAL:
            if sd > 0:
                return False
        elif is_local_square(sd, v):
            return False
    return True


def divide_by_binary(q: QuadForm, d: Rational,
                     limits: SearchLimits = DEFAULT_LIMITS) -> QuadForm:
    """A form tau with q isometric to tau x <1, -d>, when one exists.

    Divisibility needs q hyperbolic over Q(sqrt d) and the discriminant
    parity d^(dim/2) = disc(q); a lone hyperbolic plane shows the parity
    condition is not implied by the first.  The factor is peeled one
    represented value at a time and the product is re-verified at the end.
    """
    sd = squarefree_part(d)
    if sd == 1:
        raise DomainError("d must be a nonsquare")
    if q.dim % 2:
        raise DomainError("dimension must be even")
    m = q.dim // 2
    if e1(q) != (sd if m % 2 else 1):
        raise DomainError("not divisible: discriminant obstruction")
    if not is_hyperbolic_over(q, sd):
        raise DomainError(f"form stays non-hyperbolic over Q(sqrt {sd})")
    slots: list[Fraction] = []
    r = QuadForm(tuple(Fraction(squarefree_part(e)) for e in q.entries))
    while r.dim:
        c = r.entries[0]
        slots.append(c)
        # r = c<1,-d> + r'  =>  r + <-c, cd> = r' + 2 hyperbolic planes
        w = witt_decompose(direct_sum(r, diagonal(-c, c * sd)), limits)
        pad = (w.total_dim - 4 - w.kernel.dim) // 2
        assert pad >= 0, (q, sd, r)
        r = direct_sum(w.kernel, hyperbolic(pad)) if pad else w.kernel
        r = QuadForm(tuple(Fraction(squarefree_part(e)) for e in r.entries))
    tau = QuadForm(tuple(slots))
    assert isometric(tensor(tau, diagonal(1, -sd)), q), (q, sd, tau)
    return tau


# --- serialization --------------------------------------------------------

def to_json(q: QuadForm) -> dict:
    return {"entries": [str(e) for e in q.entries]}


def from_json(data: dict) -> QuadForm:
    if not isinstance(data, dict) or "entries" not in data:
        raise DomainError("quadratic form JSON needs an 'entries' list")
    raw = data["entries"]
    if not isinstance(raw, list):
        raise DomainError("'entries' must be a list")
    try:
        entries = tuple(Fraction(str(x)) for x in raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"bad rational in entries: {exc}") from None
    return QuadForm(entries)
