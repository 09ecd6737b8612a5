"""Binary sequences with equal norms that are not related by negation and
reversal, built from products of binary polynomials at spaced powers.

A binary polynomial f(x) = f_0 + f_1 x + ... + f_d x^d has +-1 coefficients
and is identified with the sequence (f_0, ..., f_d).  Its dual is
f*(x) = x^d f(1/x), the reversed coefficient list.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import product

import numpy as np

from . import packed
from .seqcore import BinarySequence, naf_vector, negate, reverse

__all__ = [
    "SignPolynomial",
    "dual",
    "composed_product",
    "negrev_equivalent",
    "same_norm",
    "negrev_class",
    "same_norm_pairs",
    "U",
    "V",
    "mask_table",
]


@dataclass(frozen=True)
class SignPolynomial:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(v) for v in self.coeffs)
        if not c or any(v not in (1, -1) for v in c):
            raise ValueError("coefficients must be +1 or -1 and at least one is needed")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def parse(cls, text: str) -> "SignPolynomial":
        return cls(BinarySequence.parse(text).signs)

    @classmethod
    def from_sequence(cls, s: BinarySequence) -> "SignPolynomial":
        return cls(s.signs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self):
        return len(self.coeffs)

    def __neg__(self):
        return SignPolynomial(tuple(-c for c in self.coeffs))

    def to_sequence(self) -> BinarySequence:
        return BinarySequence.from_signs(self.coeffs)

    def __str__(self):
        return "".join("+" if c == 1 else "-" for c in self.coeffs)


def dual(f: SignPolynomial) -> SignPolynomial:
    return SignPolynomial(f.coeffs[::-1])


def composed_product(factors, dual_mask=None, normalize: bool = True) -> BinarySequence:
    """f1(x) f2(x^m1) f3(x^(m1 m2)) ... with m_j the length of factor j.

    Factor j is replaced by its dual where dual_mask[j] is set.  With
    `normalize` the result is negated if needed so that it starts with +1
    (the sign of a binary sequence does not change its norm).
    """
    factors = list(factors)
    if not factors:
        raise ValueError("at least one factor is needed")
    if dual_mask is None:
        dual_mask = [0] * len(factors)
    if len(dual_mask) != len(factors):
        raise ValueError("dual_mask needs one entry per factor")

    prod = np.array([1], dtype=np.int64)
    step = 1
    for f, d in zip(factors, dual_mask):
        f = dual(f) if d else f
        spaced = np.zeros(step * f.degree + 1, dtype=np.int64)
        spaced[::step] = f.coeffs
        prod = np.convolve(prod, spaced)
        step *= len(f)
    # supports of the spaced factors never overlap, so no cancellation
    assert np.all(np.abs(prod) == 1), "coefficient collision in composed product"
    if normalize and prod[0] < 0:
        prod = -prod
    return BinarySequence.from_signs(prod.tolist())


def negrev_class(x: BinarySequence) -> frozenset[BinarySequence]:
    return frozenset((x, negate(x), reverse(x), negate(reverse(x))))


def negrev_equivalent(x: BinarySequence, y: BinarySequence) -> bool:
    return y in negrev_class(x)


def same_norm(x: BinarySequence, y: BinarySequence) -> bool:
    if x.length != y.length:
        return False
    if x.length == 0:
        return True
    return naf_vector(x) == naf_vector(y)


def same_norm_pairs(L: int):
    """Scan all length-L sequences; return groups of pairwise non-equivalent
    sequences sharing a norm (one representative per negation/reversal class).
    """
    if L < 1 or L > 20:
        raise ValueError("length must be in 1..20")
    # sequences starting with +1 cover every class up to negation
    words = np.arange(1 << (L - 1), dtype=packed.WORD) << packed.WORD(1)
    rev = packed.reverse(words, L)
    rev = np.where(rev & packed.WORD(1), packed.negate(rev, L), rev)
    reps = np.unique(np.minimum(words, rev))
    nafs = packed.naf_matrix(reps, L)
    groups = defaultdict(list)
    for w, row in zip(reps.tolist(), map(tuple, nafs.tolist())):
        groups[row].append(BinarySequence(int(w), L))
    return [g for g in groups.values() if len(g) > 1]


_P = SignPolynomial((1, 1, -1))
_Q = SignPolynomial((1, -1, -1))
U = composed_product([_P, _Q])
V = composed_product([_P, _Q], [0, 1])


def mask_table(factors):
    """All 2^k masked products of `factors`, keyed by mask tuple."""
    return {m: composed_product(factors, m) for m in product((0, 1), repeat=len(factors))}
