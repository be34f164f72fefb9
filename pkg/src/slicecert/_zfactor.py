"""Integer polynomial factorization engine (internal).

Dense coefficient lists of python ints, index = power of t.  The mod-l layer
uses numpy int64 vectors; lifting and recombination use python bigints with
Kronecker-substitution multiplication.  Everything is deterministic: prime
scanning is ordered, and the equal-degree splitting RNG is seeded from
(l, degree).

Not part of the public API.
"""

from __future__ import annotations

import random
from math import gcd, isqrt
from typing import Iterable, Sequence

import numpy as np

# ---------------------------------------------------------------------------
# small primes
# ---------------------------------------------------------------------------


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    # deterministic Miller-Rabin, valid far beyond any modulus used here
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_from(start: int) -> Iterable[int]:
    n = max(start, 2)
    if n % 2 == 0 and n != 2:
        n += 1
    if n == 2:
        yield 2
        n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def int_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return isqrt(n)
    r = int(round(n ** (1.0 / k)))
    while r > 0 and r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r


# ---------------------------------------------------------------------------
# GF(l)[t] with numpy vectors
# ---------------------------------------------------------------------------


def _trim(a: np.ndarray) -> np.ndarray:
    nz = np.nonzero(a)[0]
    if len(nz) == 0:
        return np.zeros(1, dtype=np.int64)
    return a[: nz[-1] + 1]


def gf_from_ints(coeffs: Sequence[int], ell: int) -> np.ndarray:
    return _trim(np.array([c % ell for c in coeffs], dtype=np.int64))


def gf_deg(a: np.ndarray) -> int:
    return len(a) - 1 if np.any(a) else -1


def gf_is_zero(a: np.ndarray) -> bool:
    return not np.any(a)


def gf_mul(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    if gf_is_zero(a) or gf_is_zero(b):
        return np.zeros(1, dtype=np.int64)
    return _trim(np.convolve(a, b) % ell)


def gf_add(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    if len(a) < len(b):
        a, b = b, a
    out = a.copy()
    out[: len(b)] = (out[: len(b)] + b) % ell
    return _trim(out)


def gf_sub(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    n = max(len(a), len(b))
    out = np.zeros(n, dtype=np.int64)
    out[: len(a)] = a
    out[: len(b)] = (out[: len(b)] - b) % ell
    return _trim(out % ell)


def gf_monic(a: np.ndarray, ell: int) -> np.ndarray:
    lc = int(a[-1])
    if lc == 1:
        return a
    return a * pow(lc, -1, ell) % ell


def gf_divmod(a: np.ndarray, b: np.ndarray, ell: int) -> tuple[np.ndarray, np.ndarray]:
    db = gf_deg(b)
    if db < 0:
        raise ZeroDivisionError
    da = gf_deg(a)
    if da < db:
        return np.zeros(1, dtype=np.int64), a.copy()
    inv = pow(int(b[db]), -1, ell)
    rem = a.copy().astype(np.int64)
    q = np.zeros(da - db + 1, dtype=np.int64)
    for i in range(da, db - 1, -1):
        c = rem[i] % ell
        if c:
            c = c * inv % ell
            q[i - db] = c
            rem[i - db : i + 1] = (rem[i - db : i + 1] - c * b) % ell
    return _trim(q), _trim(rem % ell)


def gf_rem(a, b, ell):
    return gf_divmod(a, b, ell)[1]


def gf_gcd(a: np.ndarray, b: np.ndarray, ell: int) -> np.ndarray:
    while not gf_is_zero(b):
        a, b = b, gf_rem(a, b, ell)
    if gf_is_zero(a):
        return a
    return gf_monic(a, ell)


def gf_gcdex(g: np.ndarray, h: np.ndarray, ell: int) -> tuple[np.ndarray, np.ndarray]:
    """(s, t) with s*g + t*h = 1 mod ell; requires gcd(g, h) = 1."""
    r0, r1 = g, h
    s0 = np.array([1], dtype=np.int64)
    s1 = np.zeros(1, dtype=np.int64)
    t0 = np.zeros(1, dtype=np.int64)
    t1 = np.array([1], dtype=np.int64)
    while not gf_is_zero(r1):
        q, r = gf_divmod(r0, r1, ell)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, ell), ell)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, ell), ell)
    if gf_deg(r0) != 0:
        raise ValueError("arguments are not coprime")
    inv = pow(int(r0[0]), -1, ell)
    return _trim(s0 * inv % ell), _trim(t0 * inv % ell)


def gf_pow_mod(base: np.ndarray, exp: int, mod: np.ndarray, ell: int) -> np.ndarray:
    result = np.array([1], dtype=np.int64)
    base = gf_rem(base, mod, ell)
    while exp:
        if exp & 1:
            result = gf_rem(gf_mul(result, base, ell), mod, ell)
        base = gf_rem(gf_mul(base, base, ell), mod, ell)
        exp >>= 1
    return result


def gf_derivative(a: np.ndarray, ell: int) -> np.ndarray:
    if len(a) <= 1:
        return np.zeros(1, dtype=np.int64)
    ks = np.arange(1, len(a), dtype=np.int64)
    return _trim(a[1:] * ks % ell)


def gf_is_squarefree(a: np.ndarray, ell: int) -> bool:
    d = gf_derivative(a, ell)
    if gf_is_zero(d):
        return False
    return gf_deg(gf_gcd(a, d, ell)) == 0


def _t_poly() -> np.ndarray:
    return np.array([0, 1], dtype=np.int64)


def gf_distinct_degree(f: np.ndarray, ell: int) -> list[tuple[int, np.ndarray]]:
    """Distinct-degree decomposition of monic squarefree f.

    Returns [(d, product of all irreducible factors of degree d)].
    """
    f = gf_monic(f, ell)
    out = []
    v = f
    h = _t_poly()
    i = 0
    while gf_deg(v) > 0:
        i += 1
        if 2 * i > gf_deg(v):
            out.append((gf_deg(v), v))
            break
        h = gf_pow_mod(h, ell, v, ell)
        g = gf_gcd(gf_sub(h, _t_poly(), ell), v, ell)
        if gf_deg(g) > 0:
            out.append((i, g))
            v = gf_divmod(v, g, ell)[0]
            h = gf_rem(h, v, ell)
    return out


def gf_equal_degree_split(f: np.ndarray, d: int, ell: int, rng: random.Random) -> list[np.ndarray]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles (ell odd)."""
    n = gf_deg(f)
    if n == d:
        return [f]
    exp = (ell**d - 1) // 2
    while True:
        a = np.array([rng.randrange(ell) for _ in range(n)], dtype=np.int64)
        a = _trim(a)
        if gf_deg(a) < 1:
            continue
        b = gf_pow_mod(a, exp, f, ell)
        g = gf_gcd(gf_sub(b, np.array([1], dtype=np.int64), ell), f, ell)
        dg = gf_deg(g)
        if 0 < dg < n:
            left = gf_equal_degree_split(g, d, ell, rng)
            right = gf_equal_degree_split(gf_divmod(f, g, ell)[0], d, ell, rng)
            return left + right


def gf_factor_squarefree(f: np.ndarray, ell: int) -> list[np.ndarray]:
    """Monic irreducible factors of monic squarefree f over GF(ell), ell odd."""
    rng = random.Random(ell * 0x9E3779B1 + gf_deg(f))
    out: list[np.ndarray] = []
    for d, part in gf_distinct_degree(f, ell):
        out.extend(gf_equal_degree_split(part, d, ell, rng))
    out.sort(key=lambda a: (len(a), tuple(int(c) for c in a)))
    return out


# ---------------------------------------------------------------------------
# Z[t]: Kronecker multiplication and symmetric mod-m arithmetic
# ---------------------------------------------------------------------------


def ztrim(a: list[int]) -> list[int]:
    n = len(a)
    while n > 1 and a[n - 1] == 0:
        n -= 1
    return a[:n]


def zdeg(a: Sequence[int]) -> int:
    for i in range(len(a) - 1, -1, -1):
        if a[i]:
            return i
    return -1


def ztrunc(a: Sequence[int], m: int) -> list[int]:
    """Reduce into the symmetric range (-m/2, m/2]."""
    half = m >> 1
    out = []
    for c in a:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return ztrim(out)


def _conv_ones(p: Sequence[int], n_ones: int, n_total: int) -> list[int]:
    """Convolution of p with the all-ones vector of length n_ones."""
    out = [0] * n_total
    run = 0
    for k in range(n_total):
        if k < len(p):
            run += p[k]
        if 0 <= k - n_ones < len(p):
            run -= p[k - n_ones]
        out[k] = run
    return out


def zmul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product in Z[t] by Kronecker substitution on shifted-nonnegative digits."""
    if zdeg(a) < 0 or zdeg(b) < 0:
        return [0]
    a, b = ztrim(list(a)), ztrim(list(b))
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1:
        return ztrim([c * b[0] for c in a])
    ma = max(abs(c) for c in a)
    mb = max(abs(c) for c in b)
    # digits of (a + ma)(b + mb) convolution are < (2ma)(2mb)min(len)
    blk = ((2 * ma) * (2 * mb) * len(b)).bit_length() + 2
    ea = 0
    for c in reversed(a):
        ea = (ea << blk) | (c + ma)
    eb = 0
    for c in reversed(b):
        eb = (eb << blk) | (c + mb)
    prod_int = ea * eb
    mask = (1 << blk) - 1
    n_out = len(a) + len(b) - 1
    raw = []
    for _ in range(n_out):
        raw.append(prod_int & mask)
        prod_int >>= blk
    # (a + ma*1)(b + mb*1) = ab + ma*(1*b) + mb*(a*1) + ma*mb*(1*1)
    corr_b = _conv_ones(b, len(a), n_out)
    corr_a = _conv_ones(a, len(b), n_out)
    overlap = _conv_ones([1] * len(b), len(a), n_out)
    out = [
        raw[k] - ma * corr_b[k] - mb * corr_a[k] - ma * mb * overlap[k]
        for k in range(n_out)
    ]
    return ztrim(out)


def zmul_mod(a, b, m):
    return ztrunc(zmul(a, b), m)


def zadd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] += c
    return ztrim(out)


def zsub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return ztrim(out)


def zdivmod_mod(a: Sequence[int], b: Sequence[int], m: int) -> tuple[list[int], list[int]]:
    """Division with remainder mod m; lc(b) must be invertible mod m."""
    db = zdeg(b)
    da = zdeg(a)
    if db < 0:
        raise ZeroDivisionError
    rem = [c % m for c in a]
    if da < db:
        return [0], ztrunc(rem, m)
    inv = pow(b[db] % m, -1, m)
    q = [0] * (da - db + 1)
    for i in range(da, db - 1, -1):
        c = rem[i] % m
        if c:
            c = c * inv % m
            q[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] = (rem[i - db + j] - c * b[j]) % m
    return ztrunc(q, m), ztrunc(rem[:db] if db > 0 else [0], m)


def zcontent(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def zprimitive(a: Sequence[int]) -> tuple[int, list[int]]:
    """(content_with_sign, primitive part with positive leading coefficient)."""
    d = zdeg(a)
    if d < 0:
        return 0, [0]
    c = zcontent(a)
    if a[d] < 0:
        c = -c
    return c, [x // c for x in ztrim(list(a))]


def zpoly_eval_int(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(list(a)):
        acc = acc * x + c
    return acc


def mignotte_bound(f: Sequence[int]) -> int:
    """Knuth-Cohen style bound on coefficients of any factor of f."""
    n = zdeg(f)
    a = max(abs(c) for c in f)
    b = abs(f[n])
    return (isqrt(n + 1) + 1) * (1 << n) * a * b


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic, multifactor)
# ---------------------------------------------------------------------------


def hensel_step(m: int, f, g, h, s, t):
    """One quadratic lift: mod m data -> mod m**2 data (h monic)."""
    mm = m * m
    e = ztrunc(zsub(f, zmul(g, h)), mm)
    q, r = zdivmod_mod(zmul(s, e), h, mm)
    G = ztrunc(zadd(zadd(g, zmul(t, e)), zmul(q, g)), mm)
    H = ztrunc(zadd(h, r), mm)
    b = ztrunc(zsub(zadd(zmul(s, G), zmul(t, H)), [1]), mm)
    c, d = zdivmod_mod(zmul(s, b), H, mm)
    S = ztrunc(zsub(s, d), mm)
    T = ztrunc(zsub(zsub(t, zmul(t, b)), zmul(c, G)), mm)
    return G, H, S, T


def hensel_lift(ell: int, f: list[int], facs: list[np.ndarray], exp: int) -> list[list[int]]:
    """Lift monic factors of f mod ell to monic factors mod ell**exp.

    Input: f in Z[t] squarefree mod ell, facs the monic mod-ell irreducible
    factors of f (so f = lc(f) * prod(facs) mod ell).  Output: monic integer
    polynomials F_i, symmetric mod ell**exp, with f = lc(f) * prod(F_i).
    """
    r = len(facs)
    lc = f[zdeg(f)]
    m_target = ell**exp
    if r == 1:
        inv = pow(lc % m_target, -1, m_target)
        return [ztrunc([c * inv for c in f], m_target)]
    k = r // 2
    steps = max(1, (exp - 1).bit_length())
    g = [lc % ell]
    for fac in facs[:k]:
        g = [c % ell for c in zmul(g, [int(x) for x in fac])]
    h = [1]
    for fac in facs[k:]:
        h = [c % ell for c in zmul(h, [int(x) for x in fac])]
    s_np, t_np = gf_gcdex(gf_from_ints(g, ell), gf_from_ints(h, ell), ell)
    s = ztrunc([int(c) for c in s_np], ell)
    t = ztrunc([int(c) for c in t_np], ell)
    g, h = ztrunc(g, ell), ztrunc(h, ell)
    m = ell
    for _ in range(steps):
        if m >= m_target:
            break
        g, h, s, t = hensel_step(m, ztrunc(f, m * m), g, h, s, t)
        m = m * m
    return hensel_lift(ell, ztrunc(g, m_target), facs[:k], exp) + hensel_lift(
        ell, ztrunc(h, m_target), facs[k:], exp
    )


# ---------------------------------------------------------------------------
# squarefree certification and prime selection
# ---------------------------------------------------------------------------


def good_prime_candidates(f: Sequence[int], floor: int, count: int) -> list[int]:
    """First `count` odd primes > floor keeping f squarefree with same degree."""
    lc = f[zdeg(f)]
    found = []
    for ell in primes_from(max(floor + 1, 3)):
        if lc % ell == 0:
            continue
        ff = gf_from_ints(f, ell)
        if gf_deg(ff) != zdeg(f):
            continue
        if gf_is_squarefree(ff, ell):
            found.append(ell)
            if len(found) >= count:
                return found
    return found


def zz_is_squarefree(f: Sequence[int], tries: int = 25) -> bool | None:
    """Certified True via a single good prime; None when no witness found.

    A squarefree reduction mod ell (degree preserved) proves squarefreeness
    over Q.  The converse needs Res(f, f') which callers handle exactly.
    """
    n = 0
    lc = f[zdeg(f)]
    for ell in primes_from(2 * zdeg(f) + 1):
        if lc % ell == 0:
            continue
        ff = gf_from_ints(f, ell)
        if gf_deg(ff) != zdeg(f):
            continue
        if gf_is_squarefree(ff, ell):
            return True
        n += 1
        if n >= tries:
            return None
    return None


# ---------------------------------------------------------------------------
# subset-sum degree filter
# ---------------------------------------------------------------------------


def degree_sum_mask(degrees: Sequence[int]) -> int:
    """Bitmask of achievable subset degree sums."""
    mask = 1
    for d in degrees:
        mask |= mask << d
    return mask


def modular_survey(f: Sequence[int], floor: int, n_primes: int = 5) -> list[tuple[int, list[int]]]:
    """[(ell, irreducible-factor degree multiset)] for the candidate primes.

    Degrees come from distinct-degree decomposition alone; no splitting yet.
    """
    out = []
    for ell in good_prime_candidates(f, floor, n_primes):
        degs: list[int] = []
        for d, part in gf_distinct_degree(gf_monic(gf_from_ints(f, ell), ell), ell):
            degs.extend([d] * (gf_deg(part) // d))
        out.append((ell, sorted(degs)))
    return out


def possible_factor_degrees(f: Sequence[int], floor: int, n_primes: int = 5) -> tuple[int, list[int]]:
    """(bitmask of possible rational factor degrees, candidate primes used)."""
    n = zdeg(f)
    survey = modular_survey(f, floor, n_primes)
    mask = (1 << (n + 1)) - 1
    for _, degs in survey:
        mask &= degree_sum_mask(degs)
    return mask, [ell for ell, _ in survey]


# ---------------------------------------------------------------------------
# Zassenhaus
# ---------------------------------------------------------------------------


def _subset_products_search(
    f: list[int],
    lifted: list[list[int]],
    ell_power: int,
    degree_mask: int,
) -> list[list[int]]:
    """Recombine lifted modular factors into true primitive integer factors."""
    factors: list[list[int]] = []
    T = list(range(len(lifted)))
    s = 1
    from itertools import combinations

    while 2 * s <= len(T):
        found = None
        lc = f[zdeg(f)]
        tc = f[0]
        for S in combinations(T, s):
            dsum = sum(zdeg(lifted[i]) for i in S)
            if not (degree_mask >> dsum) & 1:
                continue
            # constant-term divisibility prune
            g0 = lc
            for i in S:
                g0 = g0 * lifted[i][0] % ell_power
            half = ell_power >> 1
            if g0 > half:
                g0 -= ell_power
            if g0 == 0 or (tc * lc) % g0 != 0:
                continue
            G = [lc]
            for i in S:
                G = ztrunc(zmul(G, lifted[i]), ell_power)
            _, G = zprimitive(G)
            if zdeg(G) != dsum:
                continue
            q, ok = zz_exact_div(f, G)
            if ok:
                found = (S, G, q)
                break
        if found is None:
            s += 1
            continue
        S, G, q = found
        factors.append(G)
        f = q
        T = [i for i in T if i not in S]
        # degree mask for the cofactor still valid (subset sums only shrink)
    if zdeg(f) > 0:
        factors.append(zprimitive(f)[1])
    return factors


def zz_exact_div(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], bool]:
    """Exact division in Z[t]; returns (quotient, True) or ([], False)."""
    da, db = zdeg(a), zdeg(b)
    if db < 0:
        return [], False
    if da < db:
        return [], False
    rem = list(a)
    q = [0] * (da - db + 1)
    lb = b[db]
    for i in range(da, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        if c % lb != 0:
            return [], False
        c //= lb
        q[i - db] = c
        for j in range(db + 1):
            rem[i - db + j] -= c * b[j]
    if any(rem):
        return [], False
    return ztrim(q), True


def zz_factor_squarefree_primitive(f: Sequence[int], conductor_hint: int = 1) -> list[list[int]]:
    """Irreducible factors of a primitive squarefree f with lc > 0, deg >= 1.

    Deterministic: primes scanned in order above the spec floor, the working
    prime is the one with fewest modular factors among the first five
    admissible, ties to the smallest.
    """
    f = ztrim(list(f))
    n = zdeg(f)
    if n == 1:
        return [f]
    floor = 2 * max(conductor_hint, 1) * n
    survey = modular_survey(f, floor)
    if not survey:
        raise RuntimeError("no admissible modular prime found")
    degree_mask = (1 << (n + 1)) - 1
    for _, degs in survey:
        degree_mask &= degree_sum_mask(degs)
    if degree_mask & ~1 & ~(1 << n) == 0:
        return [f]  # no proper factor degree is achievable in every reduction

    best_ell, _ = min(survey, key=lambda item: (len(item[1]), item[0]))
    facs = gf_factor_squarefree(gf_monic(gf_from_ints(f, best_ell), best_ell), best_ell)
    if len(facs) == 1:
        return [f]

    bound = 2 * mignotte_bound(f) + 1
    exp = 1
    while best_ell**exp < bound:
        exp += 1
    lifted = hensel_lift(best_ell, f, facs, exp)
    return _subset_products_search(f, lifted, best_ell**exp, degree_mask)
