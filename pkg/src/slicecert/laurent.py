"""Laurent polynomials in one variable over Q or Q(w_p).

A polynomial is a dense coefficient run starting at `min_degree` (possibly
negative).  The zero polynomial stores an empty run with min_degree 0.
Everything downstream compares polynomials "up to factors a*t^k"; that
associate equality is `is_associate`, raw equality is dataclass equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import (
    QQ,
    CycField,
    CycNum,
    FieldMismatchError,
    GaloisMap,
    conjugate,
    galois_apply,
)


def _coerce(c, field: CycField) -> CycNum:
    if isinstance(c, CycNum):
        if c.field == field:
            return c
        if c.is_rational():
            return field.from_rational(c.coords[0])
        raise FieldMismatchError(f"coefficient in {c.field}, polynomial over {field}")
    return field.from_rational(Fraction(c))


@dataclass(frozen=True)
class LaurentPoly:
    field: CycField
    min_degree: int
    coeffs: tuple[CycNum, ...]

    @staticmethod
    def make(field: CycField, min_degree: int, coeffs: Sequence) -> "LaurentPoly":
        """Canonical constructor: coerces coefficients and trims zero ends."""
        cs = [_coerce(c, field) for c in coeffs]
        lo = 0
        while lo < len(cs) and cs[lo].is_zero():
            lo += 1
        hi = len(cs)
        while hi > lo and cs[hi - 1].is_zero():
            hi -= 1
        if lo == hi:
            return LaurentPoly(field, 0, ())
        return LaurentPoly(field, min_degree + lo, tuple(cs[lo:hi]))

    @staticmethod
    def from_coeffs(coeffs: Sequence, field: CycField = QQ, min_degree: int = 0) -> "LaurentPoly":
        return LaurentPoly.make(field, min_degree, coeffs)

    @staticmethod
    def zero(field: CycField = QQ) -> "LaurentPoly":
        return LaurentPoly(field, 0, ())

    @staticmethod
    def one(field: CycField = QQ) -> "LaurentPoly":
        return LaurentPoly(field, 0, (field.one(),))

    @staticmethod
    def t_power(k: int, field: CycField = QQ) -> "LaurentPoly":
        return LaurentPoly(field, k, (field.one(),))

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_degree(self) -> int:
        if self.is_zero():
            return 0
        return self.min_degree + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        """Degree spread (max - min); 0 for monomials and zero."""
        return 0 if self.is_zero() else len(self.coeffs) - 1

    def coefficient(self, k: int) -> CycNum:
        if self.is_zero() or not self.min_degree <= k <= self.max_degree:
            return self.field.zero()
        return self.coeffs[k - self.min_degree]

    def leading(self) -> CycNum:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_ordinary(self) -> bool:
        return self.is_zero() or self.min_degree >= 0

    def is_monic(self) -> bool:
        return not self.is_zero() and self.leading() == self.field.one()

    def is_rational_coeffs(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def to_rational_poly(self) -> "LaurentPoly":
        """Re-express over Q; requires every coefficient rational."""
        if self.field == QQ:
            return self
        return LaurentPoly.make(QQ, self.min_degree, [c.as_rational() for c in self.coeffs])

    def to_field(self, field: CycField) -> "LaurentPoly":
        if self.field == field:
            return self
        return LaurentPoly.make(field, self.min_degree, list(self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            k = self.min_degree + i
            terms.append(f"({c})*t^{k}" if k else f"({c})")
        return "LaurentPoly(" + " + ".join(terms) + ")"

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "LaurentPoly") -> CycField:
        if self.field != other.field:
            if self.field == QQ:
                return other.field
            if other.field == QQ:
                return self.field
            raise FieldMismatchError(f"{self.field} vs {other.field}")
        return self.field

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        field = self._check(other)
        a, b = self.to_field(field), other.to_field(field)
        if a.is_zero():
            return b
        if b.is_zero():
            return a
        lo = min(a.min_degree, b.min_degree)
        hi = max(a.max_degree, b.max_degree)
        out = []
        for k in range(lo, hi + 1):
            out.append(a.coefficient(k) + b.coefficient(k))
        return LaurentPoly.make(field, lo, out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.field, self.min_degree, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        field = self._check(other)
        a, b = self.to_field(field), other.to_field(field)
        if a.is_zero() or b.is_zero():
            return LaurentPoly.zero(field)
        out = [field.zero()] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, ai in enumerate(a.coeffs):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b.coeffs):
                if bj.is_zero():
                    continue
                out[i + j] = out[i + j] + ai * bj
        return LaurentPoly.make(field, a.min_degree + b.min_degree, out)

    def scale(self, c) -> "LaurentPoly":
        c = _coerce(c, self.field)
        if c.is_zero():
            return LaurentPoly.zero(self.field)
        return LaurentPoly(self.field, self.min_degree, tuple(x * c for x in self.coeffs))

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return LaurentPoly(self.field, self.min_degree + k, self.coeffs)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = LaurentPoly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def map_coefficients(self, fn) -> "LaurentPoly":
        return LaurentPoly.make(self.field, self.min_degree, [fn(c) for c in self.coeffs])


@dataclass(frozen=True)
class NormalForm:
    """f = unit_scalar * t^t_power * monic_part, monic_part(0) != 0."""

    monic_part: LaurentPoly
    unit_scalar: CycNum
    t_power: int

    def rebuild(self) -> LaurentPoly:
        return self.monic_part.scale(self.unit_scalar).shift(self.t_power)


def poly_normalize(f: LaurentPoly) -> NormalForm:
    if f.is_zero():
        raise ValueError("cannot normalize the zero polynomial")
    lead = f.leading()
    inv = lead.invert()
    monic = LaurentPoly(f.field, 0, tuple(c * inv for c in f.coeffs))
    return NormalForm(monic, lead, f.min_degree)


def monic_part(f: LaurentPoly) -> LaurentPoly:
    return poly_normalize(f).monic_part


def is_associate(f: LaurentPoly, g: LaurentPoly) -> bool:
    """Equality up to a factor a*t^k (the paper-level equality)."""
    if f.is_zero() or g.is_zero():
        return f.is_zero() and g.is_zero()
    if f.field != g.field:
        if f.is_rational_coeffs() and g.is_rational_coeffs():
            f, g = f.to_rational_poly(), g.to_rational_poly()
        else:
            return False
    return poly_normalize(f).monic_part == poly_normalize(g).monic_part


def poly_add(f, g):
    return f + g


def poly_sub(f, g):
    return f - g


def poly_mul(f, g):
    return f * g


def compose_power(f: LaurentPoly, n: int) -> LaurentPoly:
    """f(t^n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if f.is_zero() or n == 1:
        return f
    out = [f.field.zero()] * (n * (len(f.coeffs) - 1) + 1)
    for i, c in enumerate(f.coeffs):
        out[n * i] = c
    return LaurentPoly.make(f.field, n * f.min_degree, out)


def conj_reciprocal(f: LaurentPoly) -> LaurentPoly:
    """Conjugate the coefficients, substitute t -> 1/t, return the monic associate."""
    if f.is_zero():
        raise ValueError("conj_reciprocal of zero")
    rev = [conjugate(c) for c in reversed(f.coeffs)]
    flipped = LaurentPoly.make(f.field, -f.max_degree, rev)
    return poly_normalize(flipped).monic_part


def galois_apply_poly(m: GaloisMap, f: LaurentPoly) -> LaurentPoly:
    if f.field.conductor == 1:
        return f
    return f.map_coefficients(lambda c: galois_apply(m, c))


def derivative(f: LaurentPoly) -> LaurentPoly:
    if f.is_zero():
        return f
    out = []
    for i, c in enumerate(f.coeffs):
        k = f.min_degree + i
        out.append(c.scale(k))
    return LaurentPoly.make(f.field, f.min_degree - 1, out)


def poly_divmod(f: LaurentPoly, g: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Division with remainder for ordinary polynomials (min_degree >= 0)."""
    field = f._check(g)
    f, g = f.to_field(field), g.to_field(field)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if not (f.is_ordinary() and g.is_ordinary()):
        raise ValueError("divmod requires ordinary polynomials")
    if f.is_zero():
        return f, f
    num = [f.coefficient(k) for k in range(f.max_degree + 1)]
    dd = g.max_degree
    den = [g.coefficient(k) for k in range(dd + 1)]
    if len(num) - 1 < dd:
        return LaurentPoly.zero(field), f
    inv_lead = den[dd].invert()
    q = [field.zero()] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv_lead
        if c.is_zero():
            continue
        q[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] = num[i - dd + j] - c * den[j]
    return LaurentPoly.make(field, 0, q), LaurentPoly.make(field, 0, num)


def exact_div(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Exact quotient of the monic parts' product structure: f = q*g required."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return f
    nf_f, nf_g = poly_normalize(f), poly_normalize(g)
    q, r = poly_divmod(nf_f.monic_part, nf_g.monic_part)
    if not r.is_zero():
        raise ValueError("division is not exact")
    unit = nf_f.unit_scalar * nf_g.unit_scalar.invert()
    return q.scale(unit).shift(nf_f.t_power - nf_g.t_power)


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    if g.is_zero():
        return f.is_zero()
    if f.is_zero():
        return True
    _, r = poly_divmod(poly_normalize(f).monic_part, poly_normalize(g).monic_part)
    return r.is_zero()


def poly_gcd(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the monic parts; LaurentPoly.one() when coprime."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) undefined")
    field = f._check(g)
    if f.is_zero():
        return poly_normalize(g.to_field(field)).monic_part
    if g.is_zero():
        return poly_normalize(f.to_field(field)).monic_part
    a = poly_normalize(f.to_field(field)).monic_part
    b = poly_normalize(g.to_field(field)).monic_part
    # monic parts have nonzero constant term, so stripping t-powers from the
    # remainders (monic_part does both) never changes the gcd
    while not b.is_zero():
        _, r = poly_divmod(a, b)
        a, b = b, (r if r.is_zero() else monic_part(r))
    return monic_part(a)


def evaluate(f: LaurentPoly, a: CycNum) -> CycNum:
    """Exact evaluation f(a); rationals embed into either field."""
    if f.field != a.field:
        if f.is_rational_coeffs():
            f = f.to_rational_poly().to_field(a.field)
        elif a.is_rational():
            a = f.field.from_rational(a.as_rational())
        else:
            raise FieldMismatchError(f"cannot evaluate over {f.field} at {a.field} point")
    field = f.field
    if f.is_zero():
        return field.zero()
    if f.min_degree < 0 and a.is_zero():
        raise ZeroDivisionError("evaluation at 0 with negative exponents")
    acc = field.zero()
    for c in reversed(f.coeffs):
        acc = acc * a + c
    if f.min_degree:
        acc = acc * a**f.min_degree
    return acc


def resultant(f: LaurentPoly, g: LaurentPoly) -> CycNum:
    """Classical resultant; Res(f, g) = lc(f)^deg(g) * prod over f-roots of g."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of the zero polynomial")
    if not (f.is_ordinary() and g.is_ordinary()):
        raise ValueError("resultant requires ordinary polynomials")
    field = f._check(g)
    a, b = f.to_field(field), g.to_field(field)
    result = field.one()
    sign = 1
    while True:
        da, db = a.max_degree, b.max_degree
        if db == 0:
            result = result * b.coefficient(0) ** da
            break
        if da < db:
            if (da * db) % 2 == 1:
                sign = -sign
            a, b = b, a
            continue
        _, r = poly_divmod(a, b)
        if r.is_zero():
            return field.zero()
        dr = r.max_degree
        result = result * b.leading() ** (da - dr)
        if (da * db) % 2 == 1:
            sign = -sign
        a, b = b, r
    if sign < 0:
        result = -result
    return result


def squarefree_decomposition(f: LaurentPoly) -> list[tuple[LaurentPoly, int]]:
    """Yun's algorithm on the monic part; returns [(factor_i, multiplicity_i)].

    Factors are monic, squarefree, pairwise coprime, and their weighted
    product rebuilds the monic part.
    """
    if f.is_zero():
        raise ValueError("squarefree decomposition of zero")
    w = poly_normalize(f).monic_part
    if w.max_degree == 0:
        return []
    out: list[tuple[LaurentPoly, int]] = []
    d = derivative(w)
    a = poly_gcd(w, d)
    b, _ = poly_divmod(w, a)
    c, _ = poly_divmod(d, a)
    i = 1
    while b.max_degree > 0:
        step = c - derivative(b)
        g = poly_gcd(b, step)
        if g.max_degree > 0:
            out.append((g, i))
        b, _ = poly_divmod(b, g)
        c, _ = poly_divmod(step, g)
        i += 1
    return out


def squarefree_part(f: LaurentPoly) -> LaurentPoly:
    parts = squarefree_decomposition(f)
    acc = LaurentPoly.one(f.field)
    for g, _ in parts:
        acc = acc * g
    return acc


_CYCLOTOMIC_CACHE: dict[int, LaurentPoly] = {}


def cyclotomic_polynomial(d: int) -> LaurentPoly:
    """The d-th cyclotomic polynomial over Q."""
    if d < 1:
        raise ValueError("d must be positive")
    if d in _CYCLOTOMIC_CACHE:
        return _CYCLOTOMIC_CACHE[d]
    num = LaurentPoly.from_coeffs([-1] + [0] * (d - 1) + [1])  # t^d - 1
    for e in range(1, d):
        if d % e == 0:
            num = exact_div(num, cyclotomic_polynomial(e))
    _CYCLOTOMIC_CACHE[d] = num
    return num
