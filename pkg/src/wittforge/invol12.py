"""Degree 12 algebras with orthogonal involution, handled by presentation.

Everything here works with tensor decompositions (A0, sigma0) x (H, rho)
where the degree 6 factor is either the adjoint of a 6-dimensional quadratic
form (split case) or of a rank 3 skew-hermitian form over a quaternion
algebra, and rho = Int(i) o conj on H.  Writing d = i^2 and d0 for the
degree 6 discriminant, the two Clifford components of the product are
[H] + (d, d0) and [A0] + (d, d0); all invariant computations below reduce
to symbol arithmetic in those terms, so no 12x12 matrices ever appear.

The f3 invariant of a presentation with trivial discriminant and Clifford
invariant is computed along two independent routes, once through the Arason
invariant of a 12-dimensional difference of norm forms and once as a cup
product over a common quadratic splitting field, and the two must agree.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cohomology import (
    H3_ZERO,
    ZERO,
    BrauerClass,
    H3Class,
    brauer_from_symbol,
    cup_h3,
)
from .config import DEFAULT_LIMITS, SearchLimits
from .errors import BoundExceeded, DomainError
from .hermitian import (
    SkewHermForm,
    disc_adjoint,
    scaled_form,
    skew_form,
    twist_last_entry,
)
from .hermitian import from_json as herm_from_json
from .hermitian import to_json as herm_to_json
from .qarith import Rational, as_fraction, factor, is_local_square, squarefree_part
from .quadform import (
    QuadForm,
    diagonal,
    direct_sum,
    divide_by_binary,
    e1,
    e2,
    e3,
    is_hyperbolic_over,
    isometric,
    neg,
    pfister,
    scale,
    tensor,
)
from .quadform import from_json as quad_from_json
from .quadform import to_json as quad_to_json
from .quat import (
    Quat,
    QuaternionAlgebra,
    algebra,
    algebra_from_class,
    algebra_from_json,
    algebra_to_json,
    anticommutant,
    common_value_witness,
    complement_slot,
    elem_from_json,
    elem_to_json,
    three_pure_product,
)


@dataclass(frozen=True)
class Split6:
    """Adjoint of a 6-dimensional quadratic form; the split degree 6 case."""

    form: QuadForm

    def __post_init__(self):
        if self.form.dim != 6:
            raise DomainError("the split description needs a dim 6 form")

    def d0(self) -> int:
        return e1(self.form)

    def brauer(self) -> BrauerClass:
        return ZERO


@dataclass(frozen=True)
class M3H:
    """Adjoint of a rank 3 skew-hermitian form over a quaternion algebra."""

    h: SkewHermForm

    def __post_init__(self):
        if self.h.rank != 3:
            raise DomainError("the hermitian description needs rank 3")

    def d0(self) -> int:
        return disc_adjoint(self.h)

    def brauer(self) -> BrauerClass:
        return self.h.alg.brauer()


Deg6Invol = Split6 | M3H


@dataclass(frozen=True)
class QuatInvol:
    """rho = Int(i_elem) o conj on H; its discriminant is d = i_elem^2."""

    alg: QuaternionAlgebra
    i_elem: Quat

    def __post_init__(self):
        if self.i_elem.alg != self.alg:
            raise DomainError("i_elem from a different algebra")
        if not self.i_elem.is_pure() or not self.i_elem.is_invertible():
            raise DomainError("i_elem must be pure and invertible")

    def d(self) -> int:
        return squarefree_part(self.i_elem.square_scalar())


@dataclass(frozen=True)
class ProductPresentation:
    a0: Deg6Invol
    hrho: QuatInvol

    def d0(self) -> int:
        return self.a0.d0()

    def d(self) -> int:
        return self.hrho.d()

    def a_class(self) -> BrauerClass:
        return self.a0.brauer() + self.hrho.alg.brauer()

    def disc_symbol(self) -> BrauerClass:
        return brauer_from_symbol(self.d(), self.d0())


@dataclass(frozen=True)
class PfisterDecomposition:
    """psi = (<a1><<b1>> + <a2><<b2>> + <a3><<b3>>) x <<d>>, b1 b2 b3 = 1."""

    d: int
    alphas: tuple[Fraction, Fraction, Fraction]
    betas: tuple[int, int, int]

    def __post_init__(self):
        if squarefree_part(self.betas[0] * self.betas[1] * self.betas[2]) != 1:
            raise DomainError("beta product must be a square")

    def reconstruction(self) -> QuadForm:
        blocks = direct_sum(*(scale(a, pfister(b))
                              for a, b in zip(self.alphas, self.betas)))
        return tensor(blocks, pfister(self.d))


def tao_e2_coset(p: ProductPresentation) -> tuple[BrauerClass, BrauerClass]:
    """The two Clifford components: [H] + (d, d0) and [A0] + (d, d0).

    Their difference is always the class of the underlying degree 12
    algebra, so the pair is a coset and either entry determines the other.
    """
    sym = p.disc_symbol()
    return p.hrho.alg.brauer() + sym, p.a0.brauer() + sym


def has_trivial_invariants(p: ProductPresentation) -> bool:
    """Whether e1 and e2 of the product involution both vanish: (d, d0)
    must match the quaternion factor or the degree 6 factor."""
    sym = p.disc_symbol()
    return sym == p.hrho.alg.brauer() or sym == p.a0.brauer()


def is_aligned(p: ProductPresentation) -> bool:
    """(d, d0) = [H]: the component the f3 formulas are written for."""
    return p.disc_symbol() == p.hrho.alg.brauer()


def repair_decomposition(p: ProductPresentation,
                         limits: SearchLimits = DEFAULT_LIMITS,
                         ) -> ProductPresentation:
    """Move (d, d0) from the degree 6 component onto the quaternion one.

    For a split degree 6 factor with (d, d0) = [A0] = 0, twisting the last
    slot of the form by c = u^2 (u anticommuting with i_elem) produces an
    equivalent presentation whose new symbol (c d0, d) equals [H] = (d, c).
    The twist is routed through the rank 6 single-base hermitian form
    <lam1 i, ..., lam6 i> that carries the same involution.
    """
    if not isinstance(p.a0, Split6):
        raise DomainError("repair needs a split degree 6 factor")
    if p.disc_symbol() != p.a0.brauer():
        raise DomainError("repair applies when (d, d0) is the degree 6 class")
    u = anticommutant(p.hrho.alg, p.hrho.i_elem, limits)
    c = squarefree_part(u.square_scalar())
    carrier = scaled_form(p.hrho.alg, p.hrho.i_elem, p.a0.form.entries)
    twisted = twist_last_entry(carrier, c)
    repaired = ProductPresentation(Split6(diagonal(*twisted.multipliers)),
                                   p.hrho)
    assert repaired.disc_symbol() == p.hrho.alg.brauer(), (p, c)
    return repaired


def _require_aligned(p: ProductPresentation,
                     limits: SearchLimits) -> ProductPresentation:
    # f3 formulas assume (d, d0) = [H]; the other trivial component is
    # reachable by repair only when the degree 6 factor is split
    if not has_trivial_invariants(p):
        raise DomainError("f3 needs trivial discriminant and Clifford invariant")
    if is_aligned(p):
        return p
    if isinstance(p.a0, Split6):
        return repair_decomposition(p, limits)
    raise DomainError("(d, d0) matches the degree 6 class and the hermitian "
                      "description cannot be repaired in place")


def _candidate_square_classes(psi: QuadForm) -> list[int]:
    primes = {2}
    for entry in psi.entries:
        for n in (entry.numerator, entry.denominator):
            primes.update(q for q, _ in factor(abs(n)))
    cands = set()
    for r in range(len(primes) + 1):
        for sub in itertools.combinations(sorted(primes), r):
            prod = 1
            for q in sub:
                prod *= q
            cands.update((prod, -prod))
    cands.discard(1)
    return sorted(cands, key=lambda d: (abs(d), d < 0))


def decompose_split12(psi: QuadForm,
                      limits: SearchLimits = DEFAULT_LIMITS,
                      ) -> PfisterDecomposition:
    """Split a 12-dim form with trivial e1, e2 into three scaled binary
    Pfister blocks times a common <<d>>.

    The candidate d ranges over signed products of the primes dividing the
    entries of psi (and 2); a d that works makes psi hyperbolic over the
    corresponding quadratic extension, which is testable place by place.
    Exhausting the candidates is reported as a failed search, never as a
    proof that no decomposition exists.
    """
    if psi.dim != 12:
        raise DomainError("decomposition wants a dim 12 form")
    if e1(psi) != 1 or not e2(psi).is_zero():
        raise DomainError("decomposition wants trivial e1 and e2")
    for d in _candidate_square_classes(psi):
        if not is_hyperbolic_over(psi, d):
            continue
        tau = divide_by_binary(psi, d, limits)
        entries = sorted(tau.entries,
                         key=lambda f: (max(abs(f.numerator), f.denominator),
                                        f < 0))
        alphas = tuple(entries[i] for i in (0, 2, 4))
        betas = [squarefree_part(-entries[i] * entries[i + 1])
                 for i in (0, 2, 4)]
        # e2(psi) = (b1 b2 b3, d) vanishes, so moving the square class of
        # b1 b2 onto the third slot changes nothing mod <<d>>
        assert brauer_from_symbol(betas[0] * betas[1] * betas[2], d).is_zero()
        betas[2] = squarefree_part(betas[0] * betas[1])
        dec = PfisterDecomposition(d, alphas, tuple(betas))
        assert isometric(dec.reconstruction(), psi), (psi, dec)
        return dec
    raise BoundExceeded("decomposition not found within search space")


def additive_decomposition(p: ProductPresentation,
                           limits: SearchLimits = DEFAULT_LIMITS,
                           ) -> list[tuple[BrauerClass, BrauerClass]]:
    """The three (H_i, Q_i) = ((a_i d0, d), (a_i, b_i d)) symbol pairs of a
    hermitian presentation <q1, q2, q3>, where a_i = q_i^2 and b_i is a
    complementary slot of the base algebra at a_i."""
    if not isinstance(p.a0, M3H):
        raise DomainError("additive decomposition needs a hermitian "
                          "degree 6 factor")
    base = p.a0.h.alg
    d0, d = p.d0(), p.d()
    out = []
    for q in p.a0.h.entries:
        a = squarefree_part(q.square_scalar())
        b = complement_slot(base, a, witness=q, limits=limits)
        h_i = brauer_from_symbol(a * d0, d)
        q_i = brauer_from_symbol(a, b * d)
        # (a, b) = [H'] makes each pair sum to [H'] + (d, d0) on the nose
        assert h_i + q_i == base.brauer() + p.disc_symbol(), (p, a, b)
        out.append((h_i, q_i))
    return out


def decomposition_group(p: ProductPresentation,
                        limits: SearchLimits = DEFAULT_LIMITS,
                        ) -> list[BrauerClass]:
    """The eight classes {0, [A], H_i, Q_i} attached to the additive
    decomposition, in a fixed order."""
    pairs = additive_decomposition(p, limits)
    out = [ZERO, p.a_class()]
    for h_i, q_i in pairs:
        out.extend((h_i, q_i))
    return out


def _norm_form_of_class(cls: BrauerClass,
                        limits: SearchLimits) -> QuadForm:
    return algebra_from_class(cls, limits).norm_form()


def f3_via_norms(p: ProductPresentation,
                 limits: SearchLimits = DEFAULT_LIMITS) -> H3Class:
    """f3 as the Arason invariant of n_Q - n_H - <d> n_{H'}.

    Q is a quaternion representative of the full degree 12 class; the
    difference form is 12-dimensional and lands in I^3 because the three
    classes sum to zero, which is asserted rather than trusted.
    """
    p = _require_aligned(p, limits)
    h_alg = p.hrho.alg
    # a symbol representative of [A]; finding one is the index <= 2 check
    q_alg = algebra_from_class(p.a_class(), limits)
    if isinstance(p.a0, M3H):
        hp_norm = p.a0.h.alg.norm_form()
    else:
        hp_norm = algebra(1, 1).norm_form()
    phi = direct_sum(q_alg.norm_form(),
                     neg(h_alg.norm_form()),
                     neg(scale(p.d(), hp_norm)))
    assert e1(phi) == 1 and e2(phi).is_zero(), p
    return e3(phi)


def _common_splitting_class(ram: frozenset, bound: int) -> int:
    # c must stay a nonsquare at every listed place; sign first, then height
    for n in range(1, bound + 1):
        for c in (squarefree_part(n), -squarefree_part(n)):
            if c != 1 and all(not is_local_square(c, v) for v in ram):
                return c
    raise BoundExceeded("no common splitting field within the search bound")


def f3_via_symbol(p: ProductPresentation,
                  limits: SearchLimits = DEFAULT_LIMITS) -> H3Class:
    """f3 as the cup product (d e) . [Q] over a common splitting field.

    A square class c that is a local nonsquare at every place where H, H'
    or Q ramifies splits all three by the quadratic extension it generates;
    e is the complementary slot with H = (c, e).  The same cup against [H']
    must give the same bit, and does, which is asserted on every call.
    """
    p = _require_aligned(p, limits)
    h_alg = p.hrho.alg
    q_class = p.a_class()
    hp_class = p.a0.brauer()
    d = p.d()
    if h_alg.is_split():
        e = 1
    else:
        ram = h_alg.brauer().ramified | hp_class.ramified | q_class.ramified
        c = _common_splitting_class(ram, limits.height_bound)
        e = complement_slot(h_alg, c, limits=limits)
    out = cup_h3(d * e, q_class)
    assert out == cup_h3(d * e, hp_class), (p, e)
    return out


@dataclass(frozen=True)
class ExistsOutcome:
    """Result of the existence search: a witness presentation, a proof of
    impossibility, or an honest out-of-bound shrug."""

    status: str   # "witness" | "provably-none" | "unknown"
    presentation: ProductPresentation | None = None


def exists_involution(h1: QuaternionAlgebra, h2: QuaternionAlgebra,
                      limits: SearchLimits = DEFAULT_LIMITS) -> ExistsOutcome:
    """Search for an orthogonal involution with trivial e1 and e2 on the
    degree 12 algebra M3(h1 x h2).

    A common nonzero value nrd(q) = -j^2 of the norm of h1 and the pure
    norm of h2 yields one: write q as a product of three pures for the
    hermitian side and turn j into the conjugation twist on the other.
    The construction gives (d, d0) = [H] exactly, so the witness is
    aligned, never merely trivial.
    """
    try:
        wit = common_value_witness(h1, h2, limits)
        if wit is None:
            return ExistsOutcome("provably-none")
        q, j = wit
        q1, q2, q3 = three_pure_product(h1, q, limits)
        i_elem = anticommutant(h2, j, limits)
    except BoundExceeded:
        return ExistsOutcome("unknown")
    pres = ProductPresentation(M3H(skew_form(h1, q1, q2, q3)),
                               QuatInvol(h2, i_elem))
    assert is_aligned(pres), (h1, h2, pres)
    return ExistsOutcome("witness", pres)


# --- serialization ----------------------------------------------------------

def presentation_to_json(p: ProductPresentation) -> dict:
    if isinstance(p.a0, Split6):
        a0 = {"split": quad_to_json(p.a0.form)}
    else:
        a0 = {"m3h": herm_to_json(p.a0.h)}
    return {"a0": a0,
            "h": {"alg": algebra_to_json(p.hrho.alg),
                  "i": elem_to_json(p.hrho.i_elem)}}


def presentation_from_json(data) -> ProductPresentation:
    if not isinstance(data, dict) or "a0" not in data or "h" not in data:
        raise DomainError("presentation JSON needs 'a0' and 'h'")
    a0_data = data["a0"]
    if not isinstance(a0_data, dict) or len(a0_data) != 1:
        raise DomainError("a0 must be {'split': ...} or {'m3h': ...}")
    if "split" in a0_data:
        a0 = Split6(quad_from_json(a0_data["split"]))
    elif "m3h" in a0_data:
        a0 = M3H(herm_from_json(a0_data["m3h"]))
    else:
        raise DomainError("a0 must be {'split': ...} or {'m3h': ...}")
    h_data = data["h"]
    if not isinstance(h_data, dict) or "alg" not in h_data or "i" not in h_data:
        raise DomainError("h needs 'alg' and 'i'")
    alg = algebra_from_json(h_data["alg"])
    i_elem = elem_from_json(h_data["i"], expected=alg)
    return ProductPresentation(a0, QuatInvol(alg, i_elem))
