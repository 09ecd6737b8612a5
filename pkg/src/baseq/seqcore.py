"""Binary sequences, nonperiodic autocorrelation and base-sequence membership.

A sequence of length n over {+1, -1} is packed into an int: bit k is set
when element k (0-based) is -1.  Autocorrelation at lag i is then
``(n - i) - 2 * popcount((bits ^ (bits >> i)) & mask(n - i))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BinarySequence",
    "NafVector",
    "BaseQuadruple",
    "naf",
    "naf_vector",
    "is_base_sequences",
    "negate",
    "reverse",
    "alternate",
]


def _mask(n: int) -> int:
    return (1 << n) - 1


@dataclass(frozen=True, slots=True)
class BinarySequence:
    """Immutable +/-1 sequence stored as a packed bit word."""

    bits: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be non-negative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError(f"bits {self.bits:#x} do not fit in length {self.length}")

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> "BinarySequence":
        bits = 0
        length = 0
        for k, s in enumerate(signs):
            if s == -1:
                bits |= 1 << k
            elif s != 1:
                raise ValueError(f"element {k} is {s!r}, expected +1 or -1")
            length = k + 1
        return cls(bits, length)

    @classmethod
    def parse(cls, text: str) -> "BinarySequence":
        """Parse '+'/'-' text such as ``"++-+"``; commas and blanks are ignored."""
        signs = []
        for ch in text:
            if ch == "+":
                signs.append(1)
            elif ch == "-":
                signs.append(-1)
            elif ch in ", \t":
                continue
            else:
                raise ValueError(f"unexpected character {ch!r} in sequence {text!r}")
        return cls.from_signs(signs)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(-1 if (self.bits >> k) & 1 else 1 for k in range(self.length))

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, k: int) -> int:
        if k < 0:
            k += self.length
        if not 0 <= k < self.length:
            raise IndexError(k)
        return -1 if (self.bits >> k) & 1 else 1

    def __iter__(self):
        return iter(self.signs)

    def __str__(self) -> str:
        return "".join("-" if (self.bits >> k) & 1 else "+" for k in range(self.length))

    def __repr__(self) -> str:
        return f"BinarySequence({str(self)!r})"


@dataclass(frozen=True, slots=True)
class NafVector:
    """Autocorrelation values at lags 0 .. n-1."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other: "NafVector") -> "NafVector":
        k = max(len(self), len(other))
        a = self.values + (0,) * (k - len(self))
        b = other.values + (0,) * (k - len(other))
        return NafVector(tuple(x + y for x, y in zip(a, b)))


@dataclass(frozen=True, slots=True)
class BaseQuadruple:
    """(A;B;C;D) with |A| = |B| = |C| + 1 = |D| + 1.

    Membership in BS(n+1, n) is not implied; see :func:`is_base_sequences`.
    """

    a: BinarySequence
    b: BinarySequence
    c: BinarySequence
    d: BinarySequence

    def __post_init__(self):
        la, lb, lc, ld = map(len, (self.a, self.b, self.c, self.d))
        if not (la == lb == lc + 1 == ld + 1):
            raise ValueError(f"bad lengths {(la, lb, lc, ld)}; need |A|=|B|=|C|+1=|D|+1")

    @property
    def n(self) -> int:
        return len(self.c)

    @classmethod
    def parse(cls, a: str, b: str, c: str, d: str) -> "BaseQuadruple":
        return cls(*(BinarySequence.parse(t) for t in (a, b, c, d)))

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def key(self) -> tuple[int, int, int, int, int]:
        """Compact hashable form: (n, bits of A, B, C, D)."""
        return (self.n, self.a.bits, self.b.bits, self.c.bits, self.d.bits)

    @classmethod
    def from_key(cls, key: Sequence[int]) -> "BaseQuadruple":
        n, a, b, c, d = key
        return cls(BinarySequence(a, n + 1), BinarySequence(b, n + 1),
                   BinarySequence(c, n), BinarySequence(d, n))

    def __str__(self) -> str:
        return ";".join(str(s) for s in self)


def naf(s: BinarySequence, i: int) -> int:
    """Nonperiodic autocorrelation of `s` at lag `i` (any integer)."""
    i = abs(i)
    n = s.length
    if i >= n:
        return 0
    mismatch = (s.bits ^ (s.bits >> i)) & _mask(n - i)
    return (n - i) - 2 * mismatch.bit_count()


def naf_vector(s: BinarySequence) -> NafVector:
    if s.length == 0:
        raise ValueError("autocorrelation vector of an empty sequence is undefined")
    return NafVector(tuple(naf(s, i) for i in range(s.length)))


def is_base_sequences(q: BaseQuadruple) -> bool:
    n = q.n
    if sum(naf(x, 0) for x in q) != 4 * n + 2:
        return False
    return all(naf(q.a, i) + naf(q.b, i) + naf(q.c, i) + naf(q.d, i) == 0
               for i in range(1, n + 1))


def negate(s: BinarySequence) -> BinarySequence:
    return BinarySequence(s.bits ^ _mask(s.length), s.length)


def reverse(s: BinarySequence) -> BinarySequence:
    n = s.length
    out = 0
    bits = s.bits
    for k in range(n):
        if (bits >> k) & 1:
            out |= 1 << (n - 1 - k)
    return BinarySequence(out, n)


def _odd_positions(n: int) -> int:
    # 0-based odd positions, i.e. 1-based even positions
    return sum(1 << k for k in range(1, n, 2))


def alternate(s: BinarySequence) -> BinarySequence:
    """Multiply element k (1-based) by (-1)^(k-1)."""
    return BinarySequence(s.bits ^ _odd_positions(s.length), s.length)
