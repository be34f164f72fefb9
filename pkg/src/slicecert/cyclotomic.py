"""Exact arithmetic in Q and in the prime-conductor cyclotomic fields Q(w_p).

Elements are stored in the power basis {1, w, ..., w^(p-2)}, which makes
equality a plain coordinate comparison.  Conductor 1 denotes Q itself.
All values are immutable; operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .intervals import ComplexBox, RatInterval, root_of_unity_box

Rat = Fraction

Coordinate = Union[int, Fraction]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class FieldMismatchError(ValueError):
    """Operands live in different cyclotomic fields."""


@dataclass(frozen=True)
class CycField:
    """Q(w_p) for prime p; conductor 1 is Q."""

    conductor: int = 1

    def __post_init__(self):
        if self.conductor != 1 and not _is_prime(self.conductor):
            raise ValueError(f"conductor {self.conductor} is neither 1 nor prime")

    @property
    def degree(self) -> int:
        return max(self.conductor - 1, 1)

    def zero(self) -> "CycNum":
        return CycNum(self, (Fraction(0),) * self.degree)

    def one(self) -> "CycNum":
        return self.from_rational(1)

    def from_rational(self, q) -> "CycNum":
        coords = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return CycNum(self, tuple(coords))

    def root_of_unity(self, power: int = 1) -> "CycNum":
        """w^power as an element of this field (conductor must be > 1)."""
        if self.conductor == 1:
            raise ValueError("Q has no nontrivial roots of unity")
        return cyc_reduce({power: Fraction(1)}, self)

    def __repr__(self):
        return "QQ" if self.conductor == 1 else f"QQ(w_{self.conductor})"


QQ = CycField(1)


@dataclass(frozen=True)
class CycNum:
    """Element of Q(w_p), coordinates in the power basis {1, w, ..., w^(p-2)}."""

    field: CycField
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != self.field.degree:
            raise ValueError(
                f"{len(self.coords)} coordinates for a degree-{self.field.degree} field"
            )

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def is_integral(self) -> bool:
        """True when the element lies in Z[w_p]."""
        return all(c.denominator == 1 for c in self.coords)

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "CycNum") -> None:
        if self.field != other.field:
            raise FieldMismatchError(f"{self.field} vs {other.field}")

    def __add__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return CycNum(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        return CycNum(self.field, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "CycNum":
        return CycNum(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other: "CycNum") -> "CycNum":
        self._check(other)
        a, b = self.coords, other.coords
        d = self.field.degree
        if self.field.conductor == 1:
            return CycNum(self.field, (a[0] * b[0],))
        if self.is_rational():
            return other.scale(a[0])
        if other.is_rational():
            return self.scale(b[0])
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj == 0:
                    continue
                conv[i + j] += ai * bj
        return cyc_reduce(conv, self.field)

    def scale(self, q) -> "CycNum":
        q = Fraction(q)
        return CycNum(self.field, tuple(q * c for c in self.coords))

    def invert(self) -> "CycNum":
        """Multiplicative inverse; extended Euclid against Phi_p."""
        if self.is_zero():
            raise ZeroDivisionError("inversion of zero")
        if self.field.conductor == 1 or self.is_rational():
            return self.field.from_rational(1 / self.coords[0])
        p = self.field.conductor
        phi = [Fraction(1)] * p  # Phi_p = 1 + t + ... + t^(p-1)
        inv = _poly_invmod(list(self.coords), phi)
        return cyc_reduce(inv, self.field)

    def __truediv__(self, other: "CycNum") -> "CycNum":
        return self * other.invert()

    def __pow__(self, n: int) -> "CycNum":
        if n < 0:
            return self.invert() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self):
        if self.field.conductor == 1:
            return str(self.coords[0])
        terms = []
        for i, c in enumerate(self.coords):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*w")
            else:
                terms.append(f"{c}*w^{i}")
        return " + ".join(terms) if terms else "0"


def _poly_divmod_rat(num: list[Fraction], den: list[Fraction]):
    """Division with remainder for dense Fraction coefficient lists."""
    num = num[:]
    dd = len(den) - 1
    while den[dd] == 0:
        dd -= 1
    q = [Fraction(0)] * max(len(num) - dd, 1)
    inv_lead = 1 / den[dd]
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] * inv_lead
        if c == 0:
            continue
        q[i - dd] = c
        for j in range(dd + 1):
            num[i - dd + j] -= c * den[j]
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return q, num


def _poly_invmod(a: list[Fraction], m: list[Fraction]) -> list[Fraction]:
    """Inverse of a modulo m in Q[x] via extended Euclid."""
    r0, r1 = m[:], a[:]
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while any(c != 0 for c in r1):
        q, r = _poly_divmod_rat(r0, r1)
        # s0 - q*s1
        prod = [Fraction(0)] * (len(q) + len(s1) - 1)
        for i, qi in enumerate(q):
            if qi == 0:
                continue
            for j, sj in enumerate(s1):
                prod[i + j] += qi * sj
        new_s = [Fraction(0)] * max(len(s0), len(prod))
        for i, c in enumerate(s0):
            new_s[i] += c
        for i, c in enumerate(prod):
            new_s[i] -= c
        r0, r1 = r1, r
        s0, s1 = s1, new_s
        if len(r1) == 1 and r1[0] == 0:
            break
    # r0 is the gcd, a nonzero constant since m = Phi_p is irreducible
    if len(r0) != 1 or r0[0] == 0:
        raise ZeroDivisionError("element is not invertible")
    c = 1 / r0[0]
    return [x * c for x in s0]


def cyc_reduce(raw, field: CycField) -> CycNum:
    """Canonical power-basis representative of sum_i raw[i] * w^i.

    `raw` may be a sequence of any length or a {power: coefficient} mapping;
    powers fold down via w^p = 1 and w^(p-1) = -(1 + w + ... + w^(p-2)).
    """
    if isinstance(raw, dict):
        items = raw.items()
        length = max(raw, default=0) + 1
    else:
        items = enumerate(raw)
        length = len(raw)
    p = field.conductor
    if p == 1:
        total = Fraction(0)
        for i, c in items:
            total += Fraction(c)
        return CycNum(field, (total,))
    # fold w^(i mod p), then eliminate the w^(p-1) slot
    folded = [Fraction(0)] * p
    for i, c in items:
        folded[i % p] += Fraction(c)
    top = folded[p - 1]
    coords = tuple(folded[i] - top for i in range(p - 1))
    return CycNum(field, coords)


# -- composite operations --------------------------------------------------


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_sub(a: CycNum, b: CycNum) -> CycNum:
    return a - b


def cyc_negate(a: CycNum) -> CycNum:
    return -a


def cyc_invert(a: CycNum) -> CycNum:
    return a.invert()


@dataclass(frozen=True)
class GaloisMap:
    """The automorphism of Q(w_p) sending w to w^exponent."""

    field: CycField
    exponent: int

    def __post_init__(self):
        p = self.field.conductor
        if p == 1:
            if self.exponent != 1:
                raise ValueError("Q has only the identity automorphism")
            return
        if not 1 <= self.exponent <= p - 1:
            raise ValueError(f"exponent {self.exponent} out of range for p={p}")

    def __call__(self, a: CycNum) -> CycNum:
        return galois_apply(self, a)

    def compose(self, other: "GaloisMap") -> "GaloisMap":
        if self.field != other.field:
            raise FieldMismatchError("automorphisms of different fields")
        p = self.field.conductor
        if p == 1:
            return self
        return GaloisMap(self.field, (self.exponent * other.exponent) % p)


def galois_group(field: CycField) -> list[GaloisMap]:
    """All automorphisms of the field (just the identity for Q)."""
    if field.conductor == 1:
        return [GaloisMap(field, 1)]
    return [GaloisMap(field, nu) for nu in range(1, field.conductor)]


def galois_apply(m: GaloisMap, a: CycNum) -> CycNum:
    if m.field != a.field:
        raise FieldMismatchError(f"{m.field} vs {a.field}")
    p = m.field.conductor
    if p == 1 or m.exponent == 1:
        return a
    out: dict[int, Fraction] = {}
    for i, c in enumerate(a.coords):
        if c == 0:
            continue
        k = (i * m.exponent) % p
        out[k] = out.get(k, Fraction(0)) + c
    return cyc_reduce(out, a.field)


def conjugate(a: CycNum) -> CycNum:
    """Complex conjugation: w -> w^(p-1)."""
    p = a.field.conductor
    if p == 1:
        return a
    return galois_apply(GaloisMap(a.field, p - 1), a)


def field_norm(a: CycNum) -> Fraction:
    """Product of all Galois conjugates of a, an element of Q.

    Computed as the resultant Res_x(Phi_p, A) where A is the coordinate
    polynomial of a; `_norm_by_conjugates` is the slower cross-check route.
    """
    p = a.field.conductor
    if p == 1:
        return a.coords[0]
    if a.is_zero():
        return Fraction(0)
    if a.is_rational():
        return a.coords[0] ** (p - 1)
    phi = [Fraction(1)] * p
    return _resultant_rat(phi, list(a.coords))


def _norm_by_conjugates(a: CycNum) -> Fraction:
    """Reference implementation of the norm: multiply the p-1 conjugates."""
    if a.field.conductor == 1:
        return a.coords[0]
    prod = a.field.one()
    for m in galois_group(a.field):
        prod = prod * galois_apply(m, a)
    return prod.as_rational()


def _resultant_rat(f: list[Fraction], g: list[Fraction]) -> Fraction:
    """Resultant of dense Fraction coefficient lists (f monic here)."""

    def deg(h):
        d = len(h) - 1
        while d >= 0 and h[d] == 0:
            d -= 1
        return d

    f = f[: deg(f) + 1]
    g = g[: deg(g) + 1]
    result = Fraction(1)
    while True:
        df, dg = len(f) - 1, len(g) - 1
        if dg < 0:
            return Fraction(0)
        if dg == 0:
            return result * g[0] ** df
        _, r = _poly_divmod_rat(f, g)
        dr = len(r) - 1
        while dr >= 0 and r[dr] == 0:
            dr -= 1
        r = r[: dr + 1]
        result *= Fraction(-1) ** (df * dg) * g[dg] ** (df - dr)
        f, g = g, r
        if dr < 0:
            return Fraction(0)


def is_algebraic_unit(a: CycNum) -> bool:
    """True iff a is a unit of Z[w_p]; requires integral coordinates."""
    if not a.is_integral():
        raise ValueError("unit test needs integral coordinates")
    return field_norm(a) in (1, -1)


def numeric_embed(a: CycNum, precision_bits: int) -> ComplexBox:
    """Certified rectangle containing the image of a under w -> exp(2*pi*i/p).

    The rectangle side is at most 2^-precision_bits.
    """
    if precision_bits < 16:
        raise ValueError("precision_bits must be >= 16")
    p = a.field.conductor
    if a.is_rational():
        return ComplexBox.point(a.coords[0])
    work = precision_bits + 8
    while True:
        box = ComplexBox.point(a.coords[0])
        for i in range(1, len(a.coords)):
            c = a.coords[i]
            if c == 0:
                continue
            box = box + root_of_unity_box(p, i, work).scale(c)
        if box.side <= Fraction(1, 1 << precision_bits):
            return box.round_endpoints(work)
        work *= 2
