"""Complete factorization over Q and Q(w_p), with re-multiplication-verified
certificates.

Rational factorization is the classical pipeline: squarefree split, modular
factorization at a deterministic good prime, quadratic Hensel lifting to a
Mignotte-style bound, subset recombination with constant-term and
degree-pattern pruning.  Number-field factorization reduces to the rational
case through norms (Trager): shift until the norm is squarefree, factor the
norm over Q, recover factors by gcd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import _zfactor as zf
from .cyclotomic import QQ, CycField, CycNum, galois_group
from .laurent import (
    LaurentPoly,
    derivative,
    evaluate,
    galois_apply_poly,
    is_associate,
    monic_part,
    poly_divmod,
    poly_gcd,
    poly_normalize,
    squarefree_decomposition,
)

MAX_TRAGER_SHIFT = 50


def _poly_key(p: LaurentPoly):
    return (
        p.max_degree,
        p.min_degree,
        tuple(tuple(c.coords) for c in p.coeffs),
    )


@dataclass(frozen=True)
class FactorizationCertificate:
    """input = unit_scalar * t^t_power * prod(factor^multiplicity).

    Factors are monic with nonzero constant term, irreducible over
    input.field.  The identity is re-checked exactly at construction.
    """

    input: LaurentPoly
    unit_scalar: CycNum
    t_power: int
    factors: tuple[tuple[LaurentPoly, int], ...]

    def __post_init__(self):
        if not self.verify():
            raise ValueError("certificate does not re-multiply to its input")

    def verify(self) -> bool:
        acc = LaurentPoly.one(self.input.field)
        for g, mult in self.factors:
            if g.is_zero() or not g.is_monic() or g.coefficient(0).is_zero():
                return False
            acc = acc * g**mult
        acc = acc.scale(self.unit_scalar).shift(self.t_power)
        return acc == self.input

    @property
    def factor_count(self) -> int:
        return sum(m for _, m in self.factors)

    def is_irreducible_certificate(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def __repr__(self):
        facs = ", ".join(f"(deg {g.max_degree})^{m}" for g, m in self.factors)
        return f"FactorizationCertificate(unit={self.unit_scalar}, t^{self.t_power}, [{facs}])"


def _sorted_factors(counter: dict[LaurentPoly, int]) -> tuple[tuple[LaurentPoly, int], ...]:
    return tuple(sorted(counter.items(), key=lambda kv: _poly_key(kv[0])))


def _rational_int_coeffs(f: LaurentPoly) -> tuple[list[int], Fraction]:
    """(integer coefficient list, scalar) with f = scalar * int_poly; f ordinary over Q."""
    coeffs = [f.coefficient(k).as_rational() for k in range(f.max_degree + 1)]
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * den) for c in coeffs]
    cont, prim = zf.zprimitive(ints)
    return prim, Fraction(cont, den)


def factor_rational(f: LaurentPoly, _conductor_hint: int = 1) -> FactorizationCertificate:
    """Factor a nonzero Laurent polynomial over Q into rational irreducibles."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.field != QQ:
        if not f.is_rational_coeffs():
            raise ValueError("factor_rational needs rational coefficients")
        base = f.to_rational_poly()
        cert = factor_rational(base, _conductor_hint)
        return FactorizationCertificate(
            f,
            f.field.from_rational(cert.unit_scalar.as_rational()),
            cert.t_power,
            tuple((g.to_field(f.field), m) for g, m in cert.factors),
        )
    nf = poly_normalize(f)
    m = nf.monic_part
    if m.max_degree == 0:
        return FactorizationCertificate(f, nf.unit_scalar, nf.t_power, ())

    ints, _ = _rational_int_coeffs(m)
    if zf.zz_is_squarefree(ints) is True:
        parts = [(m, 1)]
    else:
        parts = squarefree_decomposition(m)

    counter: dict[LaurentPoly, int] = {}
    for part, mult in parts:
        part_ints, _ = _rational_int_coeffs(part)
        for g_ints in zf.zz_factor_squarefree_primitive(part_ints, _conductor_hint):
            lead = g_ints[-1]
            monic = LaurentPoly.from_coeffs([Fraction(c, lead) for c in g_ints])
            counter[monic] = counter.get(monic, 0) + mult
    return FactorizationCertificate(f, nf.unit_scalar, nf.t_power, _sorted_factors(counter))


def norm_polynomial(f: LaurentPoly) -> LaurentPoly:
    """prod over all Galois maps of sigma(f); rational coefficients."""
    if f.is_zero():
        raise ValueError("norm of the zero polynomial")
    if f.field.conductor == 1:
        return f
    acc = LaurentPoly.one(f.field)
    for m in galois_group(f.field):
        acc = acc * galois_apply_poly(m, f)
    return acc.to_rational_poly()


def _compose_linear_shift(f: LaurentPoly, c: CycNum) -> LaurentPoly:
    """f(t + c) for an ordinary polynomial f."""
    field = f.field
    shift_poly = LaurentPoly.make(field, 0, [c, field.one()])
    acc = LaurentPoly.zero(field)
    for k in range(f.max_degree, -1, -1):
        acc = acc * shift_poly + LaurentPoly.make(field, 0, [f.coefficient(k)])
    return acc


def _embedding_primes(p: int, count: int = 3, skip: int = 0):
    """Primes ell = 1 mod p, so Phi_p has a root mod ell."""
    out = []
    ell = 2 * p + 1
    while len(out) < count + skip:
        if zf.is_prime(ell):
            out.append(ell)
        ell += p if p > 1 else 1
    return out[skip:]


def _norm_squarefree_mod_ell(f: LaurentPoly, ell: int) -> bool | None:
    """Certified-squarefree test of norm_polynomial(f) without computing it.

    Embeds Q(w_p) into GF(ell) via a root of Phi_p (needs ell = 1 mod p),
    multiplies the p-1 conjugate images there, and tests squarefreeness.
    True is a proof; None means this prime is inconclusive.
    """
    p = f.field.conductor
    root = None
    for x in range(2, ell):
        r = pow(x, (ell - 1) // p, ell)
        if r != 1:
            root = r
            break
    if root is None:
        return None
    n = f.max_degree
    try:
        images = []
        for nu in range(1, p):
            r_nu = pow(root, nu, ell)
            poly = []
            for k in range(n + 1):
                acc = 0
                for c in reversed(f.coefficient(k).coords):
                    den = c.denominator % ell
                    if den == 0:
                        return None
                    acc = (acc * r_nu + c.numerator * pow(den, -1, ell)) % ell
                poly.append(acc)
            images.append(zf.gf_from_ints(poly, ell))
    except ValueError:
        return None
    prod = zf.gf_from_ints([1], ell)
    for img in images:
        if zf.gf_deg(img) != n:
            return None
        prod = zf.gf_mul(prod, img, ell)
    if zf.gf_deg(prod) != (p - 1) * n:
        return None
    return True if zf.gf_is_squarefree(prod, ell) else None


def _trager_squarefree_factors(s: LaurentPoly) -> list[LaurentPoly]:
    """Irreducible monic factors over Q(w_p) of monic squarefree s."""
    field = s.field
    p = field.conductor
    omega = field.root_of_unity()
    shifts = [0]
    for k in range(1, MAX_TRAGER_SHIFT + 1):
        shifts.extend([k, -k])
    def recover(shifted: LaurentPoly, sh: int) -> list[LaurentPoly]:
        norm = norm_polynomial(shifted)
        cert = factor_rational(norm, _conductor_hint=p)
        out = []
        for n_i, _mult in cert.factors:
            n_f = n_i.to_field(field)
            _, rem = poly_divmod(n_f, shifted)
            h = poly_gcd(shifted, rem) if not rem.is_zero() else monic_part(shifted)
            if h.max_degree == 0:
                continue
            if sh:
                h = monic_part(_compose_linear_shift(h, omega.scale(-sh)))
            out.append(h)
        if sum(g.max_degree for g in out) != s.max_degree:
            raise RuntimeError("norm factor recovery lost degrees")
        return out

    # fast pass: certify a squarefree norm through small-field embeddings
    for sh in shifts:
        shifted = _compose_linear_shift(s, omega.scale(sh)) if sh else s
        if any(_norm_squarefree_mod_ell(shifted, ell) for ell in _embedding_primes(p, 6)):
            return recover(shifted, sh)
    # fallback: compute norms exactly (embedding primes can all be unlucky)
    for sh in shifts:
        shifted = _compose_linear_shift(s, omega.scale(sh)) if sh else s
        ints, _ = _rational_int_coeffs(norm_polynomial(shifted))
        if zf.zz_is_squarefree(ints, tries=60) is True:
            return recover(shifted, sh)
    raise RuntimeError(f"no squarefree Trager shift with |s| <= {MAX_TRAGER_SHIFT}")


def factor_cyclotomic(f: LaurentPoly) -> FactorizationCertificate:
    """Factor a nonzero Laurent polynomial over its cyclotomic field."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if f.field.conductor == 1:
        return factor_rational(f)
    nf = poly_normalize(f)
    m = nf.monic_part
    if m.max_degree == 0:
        return FactorizationCertificate(f, nf.unit_scalar, nf.t_power, ())
    counter: dict[LaurentPoly, int] = {}
    for part, mult in squarefree_decomposition(m):
        for g in _trager_squarefree_factors(part):
            counter[g] = counter.get(g, 0) + mult
    return FactorizationCertificate(f, nf.unit_scalar, nf.t_power, _sorted_factors(counter))


def factor_over_field(f: LaurentPoly) -> FactorizationCertificate:
    """Factor over f's own coefficient field."""
    if f.field.conductor == 1:
        return factor_rational(f)
    return factor_cyclotomic(f)


def is_irreducible(f: LaurentPoly) -> bool:
    """True iff the monic part of f is irreducible over f.field."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if poly_normalize(f).monic_part.max_degree < 1:
        raise ValueError("constant polynomial has no irreducibility verdict")
    return factor_over_field(f).is_irreducible_certificate()
