"""Exact rational interval arithmetic.

Endpoints are `fractions.Fraction`, so every operation here is exact: no
rounding mode, no hidden floating point.  Enclosures of pi, cos and sin are
produced from alternating series with explicit tail bounds, which makes the
complex boxes returned by `root_of_unity_box` genuine certificates.

Interval widths grow under arithmetic; callers that need a target width
re-run at higher working precision (the doubling loop lives with the caller,
never here).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

Rat = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rat_sqrt_upper(x: Fraction, bits: int = 64) -> Fraction:
    """Rational u with u >= sqrt(x), within 2^-bits of it.  Requires x >= 0."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return _ZERO
    scale = 1 << (2 * bits)
    n = (x.numerator * scale) // x.denominator
    r = isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, 1 << bits)


def rat_sqrt_lower(x: Fraction, bits: int = 64) -> Fraction:
    """Rational l with 0 <= l <= sqrt(x)."""
    if x < 0:
        raise ValueError("negative radicand")
    if x == 0:
        return _ZERO
    scale = 1 << (2 * bits)
    n = (x.numerator * scale) // x.denominator
    return Fraction(isqrt(n), 1 << bits)


@dataclass(frozen=True)
class RatInterval:
    """Closed interval [low, high] with rational endpoints."""

    low: Fraction
    high: Fraction

    def __post_init__(self):
        if self.low > self.high:
            raise ValueError(f"empty interval [{self.low}, {self.high}]")

    @staticmethod
    def point(x) -> "RatInterval":
        x = Fraction(x)
        return RatInterval(x, x)

    @property
    def width(self) -> Fraction:
        return self.high - self.low

    @property
    def mid(self) -> Fraction:
        return (self.low + self.high) / 2

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.low + other.low, self.high + other.high)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.low - other.high, self.high - other.low)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.high, -self.low)

    def __mul__(self, other: "RatInterval") -> "RatInterval":
        cands = (
            self.low * other.low,
            self.low * other.high,
            self.high * other.low,
            self.high * other.high,
        )
        return RatInterval(min(cands), max(cands))

    def scale(self, c) -> "RatInterval":
        c = Fraction(c)
        if c >= 0:
            return RatInterval(self.low * c, self.high * c)
        return RatInterval(self.high * c, self.low * c)

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.low <= x <= self.high

    def intersects(self, other: "RatInterval") -> bool:
        return self.low <= other.high and other.low <= self.high

    def widen(self, eps: Fraction) -> "RatInterval":
        return RatInterval(self.low - eps, self.high + eps)

    def round_endpoints(self, bits: int) -> "RatInterval":
        """Coarsen endpoints to dyadics with denominator 2^bits (outward)."""
        scale = 1 << bits
        lo_n = (self.low.numerator * scale) // self.low.denominator
        hi_n = -((-self.high.numerator * scale) // self.high.denominator)
        return RatInterval(Fraction(lo_n, scale), Fraction(hi_n, scale))


@dataclass(frozen=True)
class ComplexBox:
    """Axis-aligned rectangle in the complex plane, rational endpoints."""

    re: RatInterval
    im: RatInterval

    @staticmethod
    def point(re, im=0) -> "ComplexBox":
        return ComplexBox(RatInterval.point(re), RatInterval.point(im))

    @property
    def side(self) -> Fraction:
        return max(self.re.width, self.im.width)

    def __add__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ComplexBox":
        return ComplexBox(-self.re, -self.im)

    def __mul__(self, other: "ComplexBox") -> "ComplexBox":
        return ComplexBox(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, c) -> "ComplexBox":
        return ComplexBox(self.re.scale(c), self.im.scale(c))

    def abs2(self) -> RatInterval:
        """Enclosure of |z|^2 over the box."""
        lo = _ZERO
        if self.re.low > 0:
            lo += self.re.low * self.re.low
        elif self.re.high < 0:
            lo += self.re.high * self.re.high
        if self.im.low > 0:
            lo += self.im.low * self.im.low
        elif self.im.high < 0:
            lo += self.im.high * self.im.high
        hi = max(self.re.low * self.re.low, self.re.high * self.re.high) + max(
            self.im.low * self.im.low, self.im.high * self.im.high
        )
        return RatInterval(lo, hi)

    def contains(self, re, im=0) -> bool:
        return self.re.contains(re) and self.im.contains(im)

    def intersects(self, other: "ComplexBox") -> bool:
        return self.re.intersects(other.re) and self.im.intersects(other.im)

    def round_endpoints(self, bits: int) -> "ComplexBox":
        return ComplexBox(self.re.round_endpoints(bits), self.im.round_endpoints(bits))


def _arctan_inv(k: int, err: Fraction) -> RatInterval:
    """Enclosure of arctan(1/k), k >= 2, by the alternating Leibniz series."""
    term = Fraction(1, k)
    total = _ZERO
    n = 0
    k2 = k * k
    while term > err:
        total += term if n % 2 == 0 else -term
        n += 1
        term = term * (2 * n - 1) / ((2 * n + 1) * k2)
    # alternating series: truncation error bounded by the next term,
    # with known sign
    if n % 2 == 0:
        return RatInterval(total, total + term)
    return RatInterval(total - term, total)


_PI_CACHE: dict[int, RatInterval] = {}


def pi_interval(bits: int) -> RatInterval:
    """Enclosure of pi of width <= 2^-bits (Machin's formula)."""
    if bits in _PI_CACHE:
        return _PI_CACHE[bits]
    err = Fraction(1, 1 << (bits + 6))
    a = _arctan_inv(5, err)
    b = _arctan_inv(239, err)
    quarter = a.scale(4) - b
    result = quarter.scale(4)
    _PI_CACHE[bits] = result
    return result


def _sin_cos_of_interval(x: RatInterval, bits: int) -> tuple[RatInterval, RatInterval]:
    """Taylor enclosures of (sin, cos) on x; |x| should be modest (< 8)."""
    bound = max(abs(x.low), abs(x.high))
    err = Fraction(1, 1 << (bits + 4))

    def series(start_term: Fraction, start_k: int, point: Fraction):
        # sum_{j} (-1)^j point^(start_k + 2j) / (start_k + 2j)!  with tail bound
        term = start_term
        total = _ZERO
        k = start_k
        j = 0
        p2 = point * point
        while True:
            tail = term
            if tail < 0:
                tail = -tail
            if tail <= err and bound * bound <= (k + 1) * (k + 2):
                break
            total += term
            j += 1
            term = -term * p2 / ((k + 1) * (k + 2))
            k += 2
        return RatInterval(total - tail, total + tail)

    def sin_point(p: Fraction) -> RatInterval:
        return series(p, 1, p)

    def cos_point(p: Fraction) -> RatInterval:
        return series(_ONE, 0, p)

    sl, sh = sin_point(x.low), sin_point(x.high)
    cl, ch = cos_point(x.low), cos_point(x.high)
    # sin/cos are not monotone; pad by the width (|derivative| <= 1)
    w = x.width
    sin_enc = RatInterval(min(sl.low, sh.low) - w, max(sl.high, sh.high) + w)
    cos_enc = RatInterval(min(cl.low, ch.low) - w, max(cl.high, ch.high) + w)
    clip = RatInterval(Fraction(-1), Fraction(1))
    sin_enc = RatInterval(max(sin_enc.low, clip.low), min(sin_enc.high, clip.high))
    cos_enc = RatInterval(max(cos_enc.low, clip.low), min(cos_enc.high, clip.high))
    return sin_enc, cos_enc


_ROOT_CACHE: dict[tuple[int, int, int], ComplexBox] = {}


def root_of_unity_box(p: int, k: int, bits: int) -> ComplexBox:
    """Certified enclosure of exp(2*pi*i*k/p), width about 2^-bits."""
    k = k % p
    key = (p, k, bits)
    if key in _ROOT_CACHE:
        return _ROOT_CACHE[key]
    work = bits + 8
    theta = pi_interval(work).scale(Fraction(2 * k, p))
    sin_enc, cos_enc = _sin_cos_of_interval(theta, work)
    box = ComplexBox(cos_enc, sin_enc).round_endpoints(bits + 4)
    _ROOT_CACHE[key] = box
    return box
