"""Number-theoretic primitives: primality, Legendre symbols, orders, inverses."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

# First 12 primes: deterministic Miller-Rabin for every n < 3.3e24 (covers 64 bits).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_WORD_LIMIT = 1 << 64

DEFAULT_P_LIMIT = 10_007
P_LIMIT_ENV = "QUATADIC_P_LIMIT"


class NotOddPrimeError(ValueError):
    pass


class NotInvertibleError(ValueError):
    pass


class PrimeLimitError(ValueError):
    """p is prime but larger than the configured limit."""


def p_limit() -> int:
    raw = os.environ.get(P_LIMIT_ENV)
    if raw is None:
        return DEFAULT_P_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{P_LIMIT_ENV} must be an integer, got {raw!r}") from None


def is_prime(n: int) -> bool:
    if n < 0 or n >= _WORD_LIMIT:
        raise ValueError(f"is_prime supports 0 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or p % 2 == 0 or not is_prime(p):
        raise NotOddPrimeError(f"{p} is not an odd prime")


@dataclass(frozen=True)
class OddPrimeParam:
    """An odd prime p together with the period N = 2p."""

    p: int
    n_period: int = field(init=False)

    def __post_init__(self):
        _require_odd_prime(self.p)
        limit = p_limit()
        if self.p > limit:
            raise PrimeLimitError(f"p = {self.p} exceeds the configured limit {limit}")
        object.__setattr__(self, "n_period", 2 * self.p)

    @classmethod
    def coerce(cls, p: int | OddPrimeParam) -> OddPrimeParam:
        return p if isinstance(p, cls) else cls(p)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    _require_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (n is word-sized)."""
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1 if q == 2 else 2
    if n > 1:
        out.append(n)
    return out


def primitive_root_mod_2p(p: int) -> int:
    """Smallest generator of the cyclic group Z_2p^*."""
    _require_odd_prime(p)
    n = 2 * p
    order = p - 1
    cofactors = [order // q for q in prime_factors(order)]
    for g in range(1, n, 2):
        if g % p == 0:
            continue
        if all(pow(g, e, n) != 1 for e in cofactors):
            return g
    raise AssertionError(f"no primitive root mod {n}")  # unreachable for odd prime p


def _carmichael(m: int) -> int:
    lam = 1
    rest = m
    for q in prime_factors(m):
        k = 0
        while rest % q == 0:
            rest //= q
            k += 1
        if q == 2 and k >= 3:
            part = 2 ** (k - 2)
        else:
            part = (q - 1) * q ** (k - 1)
        lam = lam * part // _gcd(lam, part)
    return lam


def multiplicative_order(a: int, m: int) -> int:
    """Smallest k >= 1 with a**k == 1 (mod m).

    The Carmichael exponent of m is computed by trial division, so m should
    be small enough to factor that way.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if _gcd(a % m, m) != 1:
        raise NotInvertibleError(f"gcd({a}, {m}) != 1; order undefined")
    a %= m
    k = _carmichael(m)
    for q in prime_factors(k):
        while k % q == 0 and pow(a, k // q, m) == 1:
            k //= q
    return k


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y == g == gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def mod_inverse(a: int, m: int) -> int:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    g, x, _ = ext_gcd(a % m, m)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible mod {m} (gcd {g})")
    return x % m


def crt_lift(p: int, a_mod_p: int, b_mod_2: int) -> int:
    """Inverse of Z_2p -> Z_p + Z_2, x -> (x mod p, x mod 2)."""
    if not 0 <= a_mod_p < p:
        raise ValueError(f"a_mod_p must lie in [0, {p}), got {a_mod_p}")
    if b_mod_2 not in (0, 1):
        raise ValueError(f"b_mod_2 must be 0 or 1, got {b_mod_2}")
    return (a_mod_p * (p + 1) + p * b_mod_2) % (2 * p)
