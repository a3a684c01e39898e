"""Exact arithmetic over Q: square classes, places, Hilbert symbols.

Everything here works with int and Fraction only.  A square class is
represented by its unique signed squarefree integer, so two rationals lie in
the same class of Q*/Q*^2 iff squarefree_part returns the same int.  Places
of Q are the real place (the string "real") and the rational primes.
"""

from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Union

from .config import DEFAULT_LIMITS
from .errors import BoundExceeded, DomainError

Rational = Union[int, Fraction]

REAL = "real"
Place = Union[str, int]


def as_fraction(x: Rational) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise DomainError(f"expected an exact rational, got {type(x).__name__}")
    return Fraction(x)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_place(v: Place) -> Place:
    if v == REAL:
        return v
    if isinstance(v, int) and not isinstance(v, bool) and is_prime(v):
        return v
    raise DomainError(f"not a place of Q: {v!r}")


@lru_cache(maxsize=None)
def factor(n: int, bound: int = DEFAULT_LIMITS.factor_bound) -> tuple[tuple[int, int], ...]:
    """Prime factorization of a positive integer as ((p, e), ...), p ascending.

    Trial division only; a surviving cofactor above bound**2 means a prime
    factor may have been missed, so we refuse rather than guess.
    """
    if n <= 0:
        raise DomainError("factor() wants a positive integer")
    out = []
    m = n
    for p in range(2, bound + 1):
        if p * p > m:
            break
        if m % p:
            continue
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        out.append((p, e))
    if m > 1:
        if m > bound * bound and not is_prime(m):
            raise BoundExceeded(f"cofactor {m} not factored within bound {bound}")
        out.append((m, 1))
    return tuple(out)


def squarefree_part(x: Rational) -> int:
    """The signed squarefree integer representing the square class of x."""
    if isinstance(x, int) and not isinstance(x, bool):
        n = x
    else:
        f = as_fraction(x)
        n = f.numerator * f.denominator
    if n == 0:
        raise DomainError("0 has no square class")
    sign = -1 if n < 0 else 1
    core = 1
    for p, e in factor(abs(n)):
        if e % 2:
            core *= p
    return sign * core


def square_class_product(*xs: Rational) -> int:
    """Squarefree part of a product, factored term by term.

    The terms are usually individually within the trial-division budget
    while their product is far beyond it, so never multiply first.
    """
    sign = 1
    odd: set[int] = set()
    for x in xs:
        s = squarefree_part(x)
        if s < 0:
            sign = -sign
        odd ^= {p for p, _ in factor(abs(s))}
    out = sign
    for p in odd:
        out *= p
    return out


def is_square(x: Rational) -> bool:
    f = as_fraction(x)
    if f <= 0:
        return False
    rn = isqrt(f.numerator)
    rd = isqrt(f.denominator)
    return rn * rn == f.numerator and rd * rd == f.denominator


def padic_valuation(x: Rational, p: int) -> int:
    check_place(p)
    f = as_fraction(x)
    if f == 0:
        raise DomainError("0 has no finite valuation")
    v = 0
    n = f.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = f.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1} for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise DomainError(f"legendre symbol wants an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def sqrt_mod_prime(a: int, p: int) -> int:
    """A square root of a mod p (Tonelli-Shanks), p prime."""
    if p == 2:
        return a % 2
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise DomainError(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = q 2^s, q odd, and walk the 2-Sylow subgroup down
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod_squarefree(a: int, m: int,
                        bound: int = DEFAULT_LIMITS.factor_bound) -> int:
    """A square root of a mod m for squarefree m > 0, by CRT over factors."""
    if m == 1:
        return 0
    root, mod = 0, 1
    for p, _ in factor(m, bound):
        rp = sqrt_mod_prime(a, p)
        # lift the pair (root mod mod, rp mod p) to mod*p
        inv = pow(mod % p, -1, p)
        root = root + mod * ((rp - root) * inv % p)
        mod *= p
    return root % m


@lru_cache(maxsize=None)
def _hilbert_core(a: int, b: int, v: Place) -> int:
    # a, b signed squarefree, so valuations are 0 or 1 and the unit parts
    # stay integers; everything runs on ints
    if v == REAL:
        return -1 if (a < 0 and b < 0) else 1
    p = v
    alpha, u = (1, a // p) if a % p == 0 else (0, a)
    beta, w = (1, b // p) if b % p == 0 else (0, b)
    if p != 2:
        sign = 1
        if alpha and beta and (p - 1) // 2 % 2:
            sign = -sign
        if beta:
            sign *= legendre(u, p)
        if alpha:
            sign *= legendre(w, p)
        return sign
    # the mod 2 classes of (u - 1)/2 and (u^2 - 1)/8 only depend on u mod 8
    eps_u, eps_w = (u - 1) // 2 % 2, (w - 1) // 2 % 2
    omega_u, omega_w = (u * u - 1) // 8 % 2, (w * w - 1) // 8 % 2
    exponent = eps_u * eps_w + alpha * omega_w + beta * omega_u
    return -1 if exponent % 2 else 1


def hilbert_symbol(a: Rational, b: Rational, v: Place) -> int:
    """The Hilbert symbol (a, b)_v in {+1, -1}.

    Computed after reduction to square-class representatives, so the cache
    only ever sees signed squarefree pairs.
    """
    check_place(v)
    return _hilbert_core(squarefree_part(a), squarefree_part(b), v)


def ramified_places(a: Rational, b: Rational) -> frozenset[Place]:
    """All places where (a, b)_v = -1.  Always of even cardinality."""
    sa, sb = squarefree_part(a), squarefree_part(b)
    candidates: set[Place] = {REAL, 2}
    for p, _ in factor(abs(sa)):
        candidates.add(p)
    for p, _ in factor(abs(sb)):
        candidates.add(p)
    ram = frozenset(v for v in candidates if _hilbert_core(sa, sb, v) == -1)
    assert len(ram) % 2 == 0, (sa, sb, ram)
    return ram


def is_local_square(a: Rational, v: Place) -> bool:
    """Whether a is a square in the completion at v."""
    check_place(v)
    s = squarefree_part(a)
    if s == 1:
        return True
    if v == REAL:
        return s > 0
    # s squarefree: v | s already means odd valuation
    if s % v == 0:
        return False
    if v == 2:
        return s % 8 == 1
    return legendre(s, v) == 1
