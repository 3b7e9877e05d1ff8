"""Arithmetic in Z_{4^N - 1}: S_A(m), m-adic complexity, the Gauss sum G_p,
the two Lemma 2 congruences and the d = d_plus * d_minus split."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from quatadic.numtheory import OddPrimeParam, legendre_symbol, mod_inverse
from quatadic.sequence import QuaternarySequence, generate_sequence


@dataclass(frozen=True)
class RingElement:
    """A residue of Z_M stored as its representative in [0, M)."""

    value: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        object.__setattr__(self, "value", self.value % self.modulus)

    def _other(self, other) -> int:
        if isinstance(other, RingElement):
            if other.modulus != self.modulus:
                raise ValueError("ring elements have different moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElement(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElement(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElement(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return RingElement(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(-self.value, self.modulus)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** -e
        return RingElement(pow(self.value, e, self.modulus), self.modulus)

    def inverse(self) -> RingElement:
        return RingElement(mod_inverse(self.value, self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return (other - self.value) % self.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value


def ring_modulus(p: int) -> int:
    """4^(2p) - 1."""
    return 4 ** (2 * p) - 1


def s_a(seq: Sequence[int] | Iterable[int], m: int) -> int:
    """The integer sum of a(i) * m**i, by Horner's rule."""
    if m < 2:
        raise ValueError(f"base must be >= 2, got {m}")
    symbols = list(seq)
    acc = 0
    for i in range(len(symbols) - 1, -1, -1):
        a = symbols[i]
        if not 0 <= a < m:
            raise ValueError(f"symbol {a} at index {i} is outside [0, {m})")
        acc = acc * m + a
    return acc


@dataclass(frozen=True)
class ComplexityResult:
    m: int
    n_period: int
    s_value: int
    d: int
    approx_bits: float

    @property
    def exact_form(self) -> tuple[int, int]:
        return (self.n_period, self.d)

    @property
    def complexity(self) -> float:
        """C_A(m) as a float, for display."""
        return self.approx_bits / math.log2(self.m)

    @property
    def is_maximal(self) -> bool:
        return self.d == 1

    def exact_text(self) -> str:
        return f"log_{self.m}(({self.m}^{self.n_period}-1)/{self.d})"


def adic_complexity(seq: Sequence[int] | Iterable[int], m: int = 4) -> ComplexityResult:
    symbols = list(seq)
    n = len(symbols)
    if n < 1:
        raise ValueError("sequence period must be >= 1")
    s = s_a(symbols, m)
    big = m**n - 1
    d = math.gcd(s, big)
    if s == 0:
        # gcd(0, M) = M; the quotient is 1 and the complexity is exactly 0.
        bits = 0.0
    else:
        bits = n * math.log2(m) - math.log2(d)
    return ComplexityResult(m=m, n_period=n, s_value=s, d=d, approx_bits=bits)


def gauss_sum(p: int | OddPrimeParam) -> RingElement:
    """Sum over a in Z_p^* of (a/p) * 4^(2a), in Z_{4^(2p)-1}."""
    p = OddPrimeParam.coerce(p).p
    mod = ring_modulus(p)
    total = 0
    for a in range(1, p):
        term = pow(16, a, mod)
        total = total + term if legendre_symbol(a, p) == 1 else total - term
        total %= mod
    return RingElement(total, mod)


def _fifteenth(mod: int) -> int:
    # 15 = 4^2 - 1 divides 4^N - 1 for every even N.
    assert mod % 15 == 0, "15 must divide 4^N - 1"
    return mod // 15


def lemma2_rhs(p: int | OddPrimeParam) -> RingElement:
    """Closed form for S_A(4) mod 4^N - 1 in terms of G_p.

    Halves are taken as multiplication by the inverse of 2 (the modulus is
    odd); (4^N - 1)/15 is exact integer division.
    """
    p = OddPrimeParam.coerce(p).p
    mod = ring_modulus(p)
    assert mod % 2 == 1
    half = RingElement(mod_inverse(2, mod), mod)
    q15 = _fifteenth(mod)
    four_p = pow(4, p, mod)
    g = gauss_sum(p)
    return (
        half * (3 * four_p - 5)
        + half * (four_p + 5) * q15
        - half * (legendre_symbol(2, p) * four_p + 1) * g
    )


def lemma2_part2_rhs(p: int | OddPrimeParam) -> RingElement:
    """(-1/p) * (p - (4^N - 1)/15) in Z_{4^N-1}."""
    p = OddPrimeParam.coerce(p).p
    mod = ring_modulus(p)
    return RingElement(legendre_symbol(-1, p) * (p - _fifteenth(mod)), mod)


def check_lemma2_part1(p: int | OddPrimeParam, s: int | None = None) -> bool:
    p = OddPrimeParam.coerce(p).p
    if s is None:
        s = s_a(generate_sequence(p), 4)
    return lemma2_rhs(p) == RingElement(s, ring_modulus(p))


def check_lemma2_part2(p: int | OddPrimeParam) -> bool:
    return gauss_sum(p) ** 2 == lemma2_part2_rhs(p)


def split_gcd(p: int | OddPrimeParam, s: int) -> tuple[int, int]:
    """(gcd(s, 4^p + 1), gcd(s, 4^p - 1)); their product is gcd(s, 4^(2p) - 1)."""
    p = OddPrimeParam.coerce(p).p
    plus, minus = 4**p + 1, 4**p - 1
    assert math.gcd(plus, minus) == 1
    d_plus, d_minus = math.gcd(s, plus), math.gcd(s, minus)
    assert d_plus * d_minus == math.gcd(s, plus * minus)
    return d_plus, d_minus


def predict_d(p: int | OddPrimeParam) -> int:
    p = OddPrimeParam.coerce(p).p
    return 5 if (p - 2) % 5 == 0 else 1


@dataclass(frozen=True)
class VerificationRecord:
    p: int
    d_plus: int
    d_minus: int
    d_total: int
    d_predicted: int
    lemma2_part1_ok: bool
    lemma2_part2_ok: bool
    theorem_ok: bool
    elapsed: float  # seconds

    @property
    def n_period(self) -> int:
        return 2 * self.p

    @property
    def all_ok(self) -> bool:
        return self.lemma2_part1_ok and self.lemma2_part2_ok and self.theorem_ok


def verify_theorem(p: int | OddPrimeParam) -> VerificationRecord:
    start = time.perf_counter()
    p = OddPrimeParam.coerce(p).p
    s = s_a(generate_sequence(p), 4)
    part1 = check_lemma2_part1(p, s)
    part2 = check_lemma2_part2(p)
    d_plus, d_minus = split_gcd(p, s)
    d_total = d_plus * d_minus
    d_pred = predict_d(p)
    return VerificationRecord(
        p=p,
        d_plus=d_plus,
        d_minus=d_minus,
        d_total=d_total,
        d_predicted=d_pred,
        lemma2_part1_ok=part1,
        lemma2_part2_ok=part2,
        theorem_ok=d_total == d_pred,
        elapsed=time.perf_counter() - start,
    )
