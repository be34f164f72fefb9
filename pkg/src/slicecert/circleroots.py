"""Exact and certified root localization.

Three routes to "how many roots on |t| = 1":

* gcd reduction: every circle root of f is shared with its
  conjugate-reciprocal, so gcd(f, conj_reciprocal(f)) = 1 settles it;
* palindromic rational polynomials go through x = t + 1/t and exact Sturm
  counting on [-2, 2];
* genuinely cyclotomic coefficients fall back to numeric isolation whose
  disks are verified with exact rational interval arithmetic (Weierstrass
  inclusion disks), so a `certified` report is a proof, not a heuristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import atan2, gcd as int_gcd, pi

import mpmath

from .cyclotomic import QQ, CycNum, numeric_embed
from .intervals import ComplexBox, RatInterval, rat_sqrt_lower, rat_sqrt_upper
from .laurent import (
    LaurentPoly,
    conj_reciprocal,
    derivative,
    evaluate,
    monic_part,
    poly_divmod,
    poly_gcd,
    poly_normalize,
    squarefree_decomposition,
)

PRECISION_CAP_BITS = 4096


@dataclass(frozen=True)
class RealInterval:
    low: Fraction
    high: Fraction

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError("low > high")

    @staticmethod
    def of(low, high) -> "RealInterval":
        return RealInterval(Fraction(low), Fraction(high))


@dataclass(frozen=True)
class CircleRootReport:
    count: int
    method: str  # exact-palindromic | gcd-reduction | certified-numeric
    certified: bool


# ---------------------------------------------------------------------------
# Sturm sequences
# ---------------------------------------------------------------------------


def _rat_coeff_list(f: LaurentPoly) -> list[Fraction]:
    return [f.coefficient(k).as_rational() for k in range(f.max_degree + 1)]


def _eval_rat(coeffs: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _sturm_chain(coeffs: list[Fraction]) -> list[list[Fraction]]:
    def deriv(p):
        return [p[i] * i for i in range(1, len(p))]

    def rem(a, b):
        a = a[:]
        db = len(b) - 1
        inv = 1 / b[db]
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i] * inv
            if c == 0:
                continue
            for j in range(db + 1):
                a[i - db + j] -= c * b[j]
        while len(a) > 1 and a[-1] == 0:
            a.pop()
        if all(c == 0 for c in a):
            return None
        return a

    chain = [coeffs, deriv(coeffs)]
    if len(chain[1]) == 0:
        return [coeffs]
    while True:
        r = rem(chain[-2], chain[-1])
        if r is None:
            break
        chain.append([-c for c in r])
        if len(r) == 1:
            break
    return chain


def _sign_variations(chain: list[list[Fraction]], x: Fraction) -> int:
    signs = []
    for p in chain:
        v = _eval_rat(p, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_count(f: LaurentPoly, interval: RealInterval) -> int:
    """Distinct real roots of the squarefree part of f in (low, high]."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not f.is_rational_coeffs():
        raise ValueError("Sturm counting needs rational coefficients")
    a, b = interval.low, interval.high
    if a == b:
        return 0
    m = monic_part(f.to_rational_poly())
    if m.max_degree == 0:
        return 0
    s = m
    g = poly_gcd(s, derivative(s))
    if g.max_degree > 0:
        s, _ = poly_divmod(s, g)

    count = 0
    for point, counted in ((b, True), (a, False)):
        if evaluate(s, QQ.from_rational(point)).is_zero():
            if counted:
                count += 1
            linear = LaurentPoly.from_coeffs([-point, 1])
            s, _ = poly_divmod(s, linear)
    if s.max_degree == 0:
        return count
    chain = _sturm_chain(_rat_coeff_list(s))
    return count + _sign_variations(chain, a) - _sign_variations(chain, b)


# ---------------------------------------------------------------------------
# the t + 1/t transform
# ---------------------------------------------------------------------------


def is_palindromic(f: LaurentPoly) -> bool:
    m = poly_normalize(f).monic_part
    cs = m.coeffs
    return all(cs[i] == cs[len(cs) - 1 - i] for i in range(len(cs)))


def chebyshev_transform(f: LaurentPoly) -> LaurentPoly:
    """q with q(t + 1/t) * t^m = f(t), for palindromic f of even degree 2m.

    Circle roots of f other than +-1 correspond in conjugate pairs to roots
    of q in (-2, 2).
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not f.is_rational_coeffs():
        raise ValueError("transform needs rational coefficients")
    m_poly = monic_part(f.to_rational_poly())
    if not is_palindromic(m_poly):
        raise ValueError("polynomial is not palindromic")
    if m_poly.max_degree % 2 != 0:
        raise ValueError("polynomial has odd degree")
    half = m_poly.max_degree // 2
    # s_k(x) = t^k + t^-k as a polynomial in x = t + 1/t
    s_prev = LaurentPoly.from_coeffs([2])
    s_cur = LaurentPoly.from_coeffs([0, 1])
    x_poly = s_cur
    q = LaurentPoly.from_coeffs([m_poly.coefficient(half).as_rational()])
    for k in range(1, half + 1):
        c = m_poly.coefficient(half + k).as_rational()
        if c:
            q = q + s_cur.scale(c)
        if k < half:
            s_prev, s_cur = s_cur, x_poly * s_cur - s_prev
    return q


# ---------------------------------------------------------------------------
# certified numeric isolation
# ---------------------------------------------------------------------------


def _poly_box_eval(coeff_boxes: list[ComplexBox], z: ComplexBox) -> ComplexBox:
    acc = coeff_boxes[-1]
    for c in reversed(coeff_boxes[:-1]):
        acc = acc * z + c
    return acc


def _dyadic(x: float, bits: int) -> Fraction:
    return Fraction(round(x * (1 << bits)), 1 << bits)


def _approx_roots(f: LaurentPoly, bits: int) -> list[complex] | None:
    n = f.max_degree
    mids = []
    for k in range(n + 1):
        box = numeric_embed(f.coefficient(k), max(53, min(bits, 256)))
        mids.append(mpmath.mpc(str(box.re.mid.numerator), 0) / str(box.re.mid.denominator)
                    + mpmath.mpc(0, 1) * mpmath.mpf(box.im.mid.numerator) / mpmath.mpf(box.im.mid.denominator))
    try:
        with mpmath.workdps(int(bits * 0.31) + 30):
            roots = mpmath.polyroots(list(reversed(mids)), maxsteps=200, extraprec=bits)
    except (mpmath.libmp.NoConvergence, ZeroDivisionError):
        return None
    return [complex(r) for r in roots]


def _root_of_unity_order_guess(z: complex, max_order: int = 1000) -> int | None:
    theta = atan2(z.imag, z.real) / (2 * pi)
    # continued-fraction style scan for a small denominator
    best = None
    for d in range(1, max_order + 1):
        k = round(theta * d)
        if abs(theta - k / d) < 1e-9 / d:
            best = d // int_gcd(k % d if k % d else d, d) if k % d else 1
            best = d
            break
    return best


def _strip_unity_roots(h: LaurentPoly, orders: list[int]) -> tuple[LaurentPoly, int]:
    """Divide out gcd(h, t^d - 1) for the given orders; returns (reduced, count)."""
    stripped = 0
    for d in sorted(set(orders)):
        if h.max_degree < 1:
            break
        td = LaurentPoly.from_coeffs([-1] + [0] * (d - 1) + [1]).to_field(h.field)
        g = poly_gcd(h, td)
        while g.max_degree > 0:
            stripped += g.max_degree
            h, _ = poly_divmod(h, g)
            g = poly_gcd(h, td)
    return h, stripped


def _certify_squarefree_circle_count(h: LaurentPoly) -> tuple[int, bool]:
    """(circle-root count, certified) for monic squarefree h, deg >= 1.

    Strategy: strip explicit root-of-unity factors exactly, then certify the
    remaining roots off the circle via Weierstrass inclusion disks with
    rational interval arithmetic; precision doubles until the cap.
    """
    count = 0
    h, n_unity = _strip_unity_roots(h, list(range(1, 31)))
    count += n_unity
    if h.max_degree < 1:
        return count, True

    n = h.max_degree
    bits = 64
    while bits <= PRECISION_CAP_BITS:
        seeds = _approx_roots(h, bits)
        if seeds is None:
            bits *= 2
            continue
        zs = [ComplexBox.point(_dyadic(z.real, bits), _dyadic(z.imag, bits)) for z in seeds]
        if len({(b.re.low, b.im.low) for b in zs}) != n:
            bits *= 2
            continue
        coeff_boxes = [numeric_embed(h.coefficient(k), bits) for k in range(n + 1)]
        radii2: list[Fraction] = []
        ok = True
        for i, z in enumerate(zs):
            val = _poly_box_eval(coeff_boxes, z)
            num = val.abs2().high
            den = Fraction(1)
            for j, zj in enumerate(zs):
                if j == i:
                    continue
                diff = z - zj
                den *= diff.abs2().low
            if den == 0:
                ok = False
                break
            radii2.append(Fraction(n * n) * num / den)
        if not ok:
            bits *= 2
            continue

        # pairwise disjoint: |z_i - z_j|^2 > (r_i + r_j)^2, via (a+b)^2 <= 2a^2+2b^2
        disjoint = True
        for i in range(n):
            for j in range(i + 1, n):
                d2 = (zs[i] - zs[j]).abs2().low
                if d2 <= 2 * radii2[i] + 2 * radii2[j]:
                    disjoint = False
                    break
            if not disjoint:
                break
        if not disjoint:
            bits *= 2
            continue

        ambiguous = []
        for i, z in enumerate(zs):
            s2 = z.abs2()  # exact: z is a point
            s = s2.low
            u = rat_sqrt_upper(s, 64)
            lo = rat_sqrt_lower(s, 64)
            if s > 1:
                gap = (s - 1) / (u + 1)
            else:
                gap = (1 - s) / (lo + 1)
            if gap > 0 and gap * gap > radii2[i]:
                continue  # certified off-circle
            ambiguous.append(i)
        if not ambiguous:
            return count, True
        # a stubborn disk may be hugging a root of unity we did not pre-strip
        orders = []
        for i in ambiguous:
            guess = _root_of_unity_order_guess(seeds[i])
            if guess:
                orders.append(guess)
        if orders:
            h2, extra = _strip_unity_roots(h, orders)
            if extra:
                sub_count, sub_ok = (0, True)
                if h2.max_degree >= 1:
                    sub_count, sub_ok = _certify_squarefree_circle_count(h2)
                return count + extra + sub_count, sub_ok
        bits *= 2
    return count, False


# ---------------------------------------------------------------------------
# the public counting operation
# ---------------------------------------------------------------------------


def unit_circle_root_count(f: LaurentPoly) -> CircleRootReport:
    """Roots of the monic part of f on |t| = 1, counted with multiplicity."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    work = poly_normalize(f).monic_part
    if work.is_rational_coeffs() and work.field != QQ:
        work = work.to_rational_poly()
    if work.max_degree == 0:
        return CircleRootReport(0, "gcd-reduction", True)

    total = 0
    method = "gcd-reduction"
    certified = True

    for part, mult in squarefree_decomposition(work):
        s = part
        local = 0
        # +-1 handled exactly up front
        for point in (1, -1):
            if evaluate(s, s.field.from_rational(point)).is_zero():
                local += 1
                linear = LaurentPoly.from_coeffs([-point, 1]).to_field(s.field)
                s, _ = poly_divmod(s, linear)
        if s.max_degree > 0:
            h = poly_gcd(s, conj_reciprocal(s))
            if h.max_degree > 0:
                if h.is_rational_coeffs():
                    hq = h.to_rational_poly()
                    # after stripping +-1 a rational conj-reciprocal gcd is palindromic
                    q = chebyshev_transform(hq)
                    interior = sturm_count(q, RealInterval.of(-2, 2))
                    local += 2 * interior
                    if method != "certified-numeric":
                        method = "exact-palindromic"
                else:
                    n_circ, ok = _certify_squarefree_circle_count(h)
                    local += n_circ
                    certified = certified and ok
                    method = "certified-numeric"
        total += mult * local
    return CircleRootReport(total, method, certified)
