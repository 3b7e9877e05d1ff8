"""Cyclotomic classes of Z_2p and the quaternary sequence built from them."""

from __future__ import annotations

from dataclasses import dataclass

from quatadic.numtheory import OddPrimeParam, legendre_symbol, primitive_root_mod_2p


class SequenceFormatError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class CyclotomicPartition:
    """Z_2p split into D0(2p), D1(2p), 2*D0(p), 2*D1(p) and {0, p}.

    Each class is a sorted tuple of residues.
    """

    p: int
    d0_2p: tuple[int, ...]
    d1_2p: tuple[int, ...]
    two_d0_p: tuple[int, ...]
    two_d1_p: tuple[int, ...]
    special: tuple[int, int]

    def classes(self) -> list[tuple[int, ...]]:
        return [self.d0_2p, self.d1_2p, self.two_d0_p, self.two_d1_p, self.special]


@dataclass(frozen=True)
class QuaternarySequence:
    p: int
    symbols: tuple[int, ...]

    def __post_init__(self):
        if len(self.symbols) != 2 * self.p:
            raise ValueError(f"expected {2 * self.p} symbols, got {len(self.symbols)}")
        if any(s not in (0, 1, 2, 3) for s in self.symbols):
            raise ValueError("symbols must lie in {0, 1, 2, 3}")

    @property
    def n_period(self) -> int:
        return 2 * self.p

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __getitem__(self, i):
        return self.symbols[i]


def _quadratic_classes(p: int) -> tuple[list[int], list[int]]:
    residues = [a for a in range(1, p) if legendre_symbol(a, p) == 1]
    nonresidues = [a for a in range(1, p) if legendre_symbol(a, p) == -1]
    return residues, nonresidues


def squares_subgroup(p: int, g: int) -> tuple[int, ...]:
    """The subgroup <g^2> of Z_2p^*."""
    n = 2 * p
    g2 = g * g % n
    out = []
    x = 1
    for _ in range((p - 1) // 2):
        out.append(x)
        x = x * g2 % n
    return tuple(sorted(out))


def squares_by_legendre(p: int) -> tuple[int, ...]:
    """Odd residues of Z_2p (other than p) that are squares mod p.

    Uses Z_2p = Z_p + Z_2: an odd unit is a square mod 2p exactly when it is
    a square mod p. Independent of any primitive root.
    """
    return tuple(sorted(i for i in range(1, 2 * p, 2) if i != p and legendre_symbol(i, p) == 1))


def build_partition(p: int | OddPrimeParam, g: int | None = None) -> CyclotomicPartition:
    """Build the five-class partition of Z_2p.

    ``g`` may name any primitive root mod 2p; the smallest one is used by
    default. The result does not depend on the choice.
    """
    p = OddPrimeParam.coerce(p).p
    n = 2 * p
    if g is None:
        g = primitive_root_mod_2p(p)
    d0 = squares_subgroup(p, g)
    d1 = tuple(sorted(g * x % n for x in d0))
    residues, nonresidues = _quadratic_classes(p)
    return CyclotomicPartition(
        p=p,
        d0_2p=d0,
        d1_2p=d1,
        two_d0_p=tuple(sorted(2 * a % n for a in residues)),
        two_d1_p=tuple(sorted(2 * a % n for a in nonresidues)),
        special=(0, p),
    )


def generate_sequence(p: int | OddPrimeParam) -> QuaternarySequence:
    part = build_partition(p)
    p = part.p
    symbols = [None] * (2 * p)
    labelled = [
        ((0,), 0),
        (part.d0_2p, 0),
        ((p,), 2),
        (part.two_d0_p, 2),
        (part.d1_2p, 1),
        (part.two_d1_p, 3),
    ]
    for indices, value in labelled:
        for i in indices:
            assert symbols[i] is None, f"index {i} assigned twice"
            symbols[i] = value
    assert None not in symbols
    return QuaternarySequence(p, tuple(symbols))


def sequence_to_text(seq: QuaternarySequence) -> str:
    return "".join(str(s) for s in seq.symbols)


def parse_digits(text: str, base: int = 4) -> list[int]:
    """Parse one ASCII digit per symbol; a single trailing newline is allowed."""
    if not 2 <= base <= 10:
        raise ValueError(f"digit format supports bases 2..10, got {base}")
    if text.endswith("\n"):
        text = text[:-1]
    out = []
    for pos, ch in enumerate(text):
        if not ("0" <= ch <= "9"):
            raise SequenceFormatError(f"non-digit character {ch!r}", pos)
        v = ord(ch) - 48
        if v >= base:
            raise SequenceFormatError(f"digit {v} out of range for base {base}", pos)
        out.append(v)
    return out


def sequence_from_text(text: str, p: int) -> QuaternarySequence:
    symbols = parse_digits(text, 4)
    if len(symbols) != 2 * p:
        raise SequenceFormatError(
            f"length {len(symbols)} does not match period {2 * p}", min(len(symbols), 2 * p)
        )
    return QuaternarySequence(p, tuple(symbols))
