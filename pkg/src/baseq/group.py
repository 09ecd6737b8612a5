"""The order-4096 symmetry group acting on BS(n+1, n).

Elements are normal-form words

    alpha^s * (nu1 rho1 nu2 rho2 sigma1) * (nu3 rho3 nu4 rho4 sigma2 theta)

with every exponent in {0, 1}, packed into a 12-bit index (bit j is the
exponent of ``GENERATORS[j]``).  Products are reduced to normal form by a
small rewriting system built from the defining relations; a group instance
is bound to the parity of n because the relations involving alpha depend
on it.

As operators, words act right to left: ``apply(g, S)`` applies theta first
and alpha last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

from .quadcodec import BS, CENTRAL, GOLAY, QuadCode, code_shape, decode, encode
from .seqcore import BaseQuadruple, is_base_sequences, negate, reverse
from .transforms import t3_swap, t4_tau, t5_alternate, tau

__all__ = [
    "GENERATORS",
    "ORDER",
    "GroupElement",
    "SymmetryGroup",
    "group",
    "all_elements",
    "mul",
    "apply",
    "orbit",
    "generator",
]

GENERATORS = ("alpha", "nu1", "rho1", "nu2", "rho2", "sigma1",
              "nu3", "rho3", "nu4", "rho4", "sigma2", "theta")
ORDER = 1 << len(GENERATORS)

ALPHA, NU1, RHO1, NU2, RHO2, SIGMA1, NU3, RHO3, NU4, RHO4, SIGMA2, THETA = range(12)
_H1 = range(NU1, SIGMA1 + 1)
_H2 = range(NU3, THETA + 1)
_PARTNER = {NU1: NU2, NU2: NU1, RHO1: RHO2, RHO2: RHO1,
            NU3: NU4, NU4: NU3, RHO3: RHO4, RHO4: RHO3}
# theta x theta for x in the (C;D) part
_THETA_CONJ = {NU3: (NU3, RHO3, RHO4), RHO3: (RHO4,), NU4: (RHO3, NU4, RHO4),
               RHO4: (RHO3,), SIGMA2: (SIGMA2,)}


def _alpha_conj(x: int, parity: int) -> tuple[int, ...]:
    """alpha x alpha as a normal-form word."""
    if x in (RHO1, RHO2):
        # alpha rho_i alpha = rho_i nu_i^n
        return (x - 1, x) if parity else (x,)
    if x in (RHO3, RHO4):
        # alpha rho_j alpha = rho_j nu_j^(n-1)
        return (x,) if parity else (x - 1, x)
    if x == THETA:
        # alpha theta alpha = theta sigma2^(n-1)
        return (THETA,) if parity else (SIGMA2, THETA)
    return (x,)


def _rewrite(y: int, x: int, parity: int) -> tuple[int, ...]:
    """Replacement for the out-of-order adjacent pair ``y x`` (x <= y)."""
    if x == y:
        return ()
    if x == ALPHA:
        return (ALPHA,) + _alpha_conj(y, parity)
    if y == SIGMA1 and x in _PARTNER:
        return (_PARTNER[x], SIGMA1)
    if y == SIGMA2 and x in _PARTNER and x in _H2:
        return (_PARTNER[x], SIGMA2)
    if y == THETA and x in _THETA_CONJ:
        return _THETA_CONJ[x] + (THETA,)
    # everything else commutes
    return (x, y)


def _collect(word: Iterable[int], parity: int) -> int:
    w = list(word)
    k = 0
    while k < len(w) - 1:
        y, x = w[k], w[k + 1]
        if x > y:
            k += 1
            continue
        w[k:k + 2] = _rewrite(y, x, parity)
        k = max(k - 1, 0)
    index = 0
    for g in w:
        index |= 1 << g
    return index


def _word(index: int) -> tuple[int, ...]:
    return tuple(j for j in range(12) if (index >> j) & 1)


@dataclass(frozen=True, slots=True)
class GroupElement:
    """Normal-form group element, bound to the parity of n."""

    index: int
    parity: int

    def __post_init__(self):
        if not 0 <= self.index < ORDER:
            raise ValueError(f"index {self.index} out of range")
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")

    @property
    def s(self) -> int:
        return self.index & 1

    @property
    def h1(self) -> tuple[int, ...]:
        return tuple((self.index >> j) & 1 for j in _H1)

    @property
    def h2(self) -> tuple[int, ...]:
        return tuple((self.index >> j) & 1 for j in _H2)

    @property
    def word(self) -> tuple[str, ...]:
        return tuple(GENERATORS[j] for j in _word(self.index))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return mul(self, other)

    def __call__(self, qd: BaseQuadruple) -> BaseQuadruple:
        return apply(self, qd)

    def __str__(self) -> str:
        return "*".join(self.word) or "1"


def _act_generator(j: int, qd: BaseQuadruple) -> BaseQuadruple:
    a, b, c, d = qd
    if j == ALPHA:
        return t5_alternate(qd)
    if j == NU1:
        return BaseQuadruple(negate(a), b, c, d)
    if j == RHO1:
        return BaseQuadruple(reverse(a), b, c, d)
    if j == NU2:
        return BaseQuadruple(a, negate(b), c, d)
    if j == RHO2:
        return BaseQuadruple(a, reverse(b), c, d)
    if j == SIGMA1:
        return t3_swap(qd, "AB")
    if j == NU3:
        return BaseQuadruple(a, b, negate(c), d)
    if j == RHO3:
        return BaseQuadruple(a, b, reverse(c), d)
    if j == NU4:
        return BaseQuadruple(a, b, c, negate(d))
    if j == RHO4:
        return BaseQuadruple(a, b, c, reverse(d))
    if j == SIGMA2:
        return t3_swap(qd, "CD")
    return t4_tau(qd)


# Quad-level action of the non-alpha generators.  A quad pattern is
# ((x_i, x_mirror), (y_i, y_mirror)); a central column is (x_k, y_k).

def _quad_op(j: int, pat, pair: int):
    """Image of a 2x2 pattern in pair 0 = (A;B) or 1 = (C;D) under generator j."""
    (x0, x1), (y0, y1) = pat
    local = j - (NU1 if pair == 0 else NU3)
    if pair == 0 and j not in _H1 or pair == 1 and j not in _H2:
        return pat
    if local == 0:
        return (-x0, -x1), (y0, y1)
    if local == 1:
        return (x1, x0), (y0, y1)
    if local == 2:
        return (x0, x1), (-y0, -y1)
    if local == 3:
        return (x0, x1), (y1, y0)
    if local == 4:
        return (y0, y1), (x0, x1)
    raise AssertionError("theta is handled on labels")


def _column_op(j: int, col, pair: int):
    x, y = col
    local = j - (NU1 if pair == 0 else NU3)
    if pair == 0 and j not in _H1 or pair == 1 and j not in _H2:
        return col
    return {0: (-x, y), 1: (x, y), 2: (x, -y), 3: (x, y), 4: (y, x), 5: (x, y)}[local]


def _label_perm(alphabet: dict, image) -> np.ndarray:
    inv = {pat: lab for lab, pat in alphabet.items()}
    perm = np.arange(max(alphabet) + 1, dtype=np.int8)
    for lab, pat in alphabet.items():
        perm[lab] = inv[image(pat)]
    return perm


def _generator_perms(j: int, pair: int) -> dict[str, np.ndarray]:
    """Label permutations of generator j (non-alpha) on each alphabet of a pair."""
    if j == THETA:
        if pair == 0:
            golay = np.arange(9, dtype=np.int8)
            bs = np.arange(9, dtype=np.int8)
        else:
            golay = np.arange(9, dtype=np.int8)
            bs = np.array([tau(k) for k in range(9)], dtype=np.int8)
        return {"golay": golay, "bs": bs, "central": np.arange(4, dtype=np.int8)}
    return {
        "golay": _label_perm(GOLAY, lambda pat: _quad_op(j, pat, pair)),
        "bs": _label_perm(BS, lambda pat: _quad_op(j, pat, pair)),
        "central": _label_perm(CENTRAL, lambda col: _column_op(j, col, pair)),
    }


class SymmetryGroup:
    """The group for one parity of n, with cached multiplication tables."""

    def __init__(self, parity: int):
        if parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        self.parity = parity

    def __repr__(self) -> str:
        return f"SymmetryGroup(parity={self.parity})"

    def element(self, index: int) -> GroupElement:
        return GroupElement(index, self.parity)

    @property
    def identity(self) -> GroupElement:
        return self.element(0)

    def generator(self, name: str) -> GroupElement:
        return self.element(1 << GENERATORS.index(name))

    @property
    def generators(self) -> list[GroupElement]:
        return [self.element(1 << j) for j in range(12)]

    def elements(self) -> list[GroupElement]:
        return [self.element(i) for i in range(ORDER)]

    def from_word(self, names: Iterable[str]) -> GroupElement:
        """Normal form of an arbitrary product of generators (leftmost acts last)."""
        return self.element(_collect((GENERATORS.index(x) for x in names), self.parity))

    @cached_property
    def right_table(self) -> np.ndarray:
        """``right_table[g, j]`` = index of g * GENERATORS[j]."""
        t = np.empty((ORDER, 12), dtype=np.int16)
        for g in range(ORDER):
            w = _word(g)
            for j in range(12):
                t[g, j] = _collect(w + (j,), self.parity)
        return t

    @cached_property
    def cayley_table(self) -> np.ndarray:
        """``cayley_table[g, h]`` = index of g * h, int16, shape (4096, 4096)."""
        R = self.right_table
        table = np.empty((ORDER, ORDER), dtype=np.int16)
        col = np.arange(ORDER, dtype=np.int16)
        for h in range(ORDER):
            c = col
            for j in _word(h):
                c = R[c, j]
            table[:, h] = c
        return table

    def _check(self, *elems: GroupElement):
        for e in elems:
            if e.parity != self.parity:
                raise ValueError(f"element {e} has parity {e.parity}, group has {self.parity}")

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._check(g, h)
        return self.element(int(self.cayley_table[g.index, h.index]))

    def inverse(self, g: GroupElement) -> GroupElement:
        self._check(g)
        (idx,) = np.nonzero(self.cayley_table[g.index] == 0)[0]
        return self.element(int(idx))

    def apply(self, g: GroupElement, qd: BaseQuadruple) -> BaseQuadruple:
        """Act on a quadruple, generator by generator."""
        self._check(g)
        if qd.n % 2 != self.parity:
            raise ValueError(f"n={qd.n} does not match group parity {self.parity}")
        for j in reversed(_word(g.index)):
            qd = _act_generator(j, qd)
        return qd

    # code-level action of the subgroup without alpha

    @cached_property
    def _pair_tables(self):
        """Per-pair label permutation tables for every exponent vector of H1 / H2.

        Returns dicts keyed by alphabet name with arrays of shape (32, 9|4)
        for (A;B) and (64, 9|4) for (C;D).
        """
        out = []
        for pair, gens in ((0, list(_H1)), (1, list(_H2))):
            gperms = {j: _generator_perms(j, pair) for j in gens}
            size = 1 << len(gens)
            tables = {k: np.empty((size, 9 if k != "central" else 4), dtype=np.int8)
                      for k in ("golay", "bs", "central")}
            for e in range(size):
                word = [gens[t] for t in range(len(gens)) if (e >> t) & 1]
                for kind, tab in tables.items():
                    perm = np.arange(tab.shape[1], dtype=np.int8)
                    # rightmost generator acts first
                    for j in reversed(word):
                        perm = gperms[j][kind][perm]
                    tab[e] = perm
            out.append(tables)
        return out

    def _split(self, g: GroupElement) -> tuple[int, int]:
        return (g.index >> NU1) & 0x1F, (g.index >> NU3) & 0x3F

    def act_on_code(self, g: GroupElement, code: QuadCode) -> QuadCode:
        """Quad-wise action of an alpha-free element on a code."""
        self._check(g)
        if g.s:
            raise ValueError("alpha does not act quad-wise; use apply()")
        e1, e2 = self._split(g)
        pk, qk = code_shape(code.n)
        tp, tq = self._pair_tables
        p = tuple(int(tp[k][e1][lab]) for k, lab in zip(pk, code.p))
        q = tuple(int(tq[k][e2][lab]) for k, lab in zip(qk, code.q))
        return QuadCode(code.n, p, q)

    def half_images(self, code: QuadCode):
        """All images of the p half under H1 and the q half under H2.

        Returns (p_images, q_images) as int8 arrays of shape (32, len p) and
        (64, len q); row e is the image under the exponent vector e.
        """
        pk, qk = code_shape(code.n)
        tp, tq = self._pair_tables
        p_img = np.empty((32, len(pk)), dtype=np.int8)
        q_img = np.empty((64, len(qk)), dtype=np.int8)
        for i, (k, lab) in enumerate(zip(pk, code.p)):
            p_img[:, i] = tp[k][:, lab]
        for i, (k, lab) in enumerate(zip(qk, code.q)):
            q_img[:, i] = tq[k][:, lab]
        return p_img, q_img

    def orbit(self, qd: BaseQuadruple) -> frozenset[BaseQuadruple]:
        """All images of a BS member, via the quad-wise tables on S and alpha(S)."""
        if not is_base_sequences(qd):
            raise ValueError("orbit() needs a member of BS(n+1, n)")
        if qd.n % 2 != self.parity:
            raise ValueError(f"n={qd.n} does not match group parity {self.parity}")
        members = set()
        for start in (qd, t5_alternate(qd)):
            code = encode(start)
            p_img, q_img = self.half_images(code)
            ps = {tuple(r) for r in p_img.tolist()}
            qs = {tuple(r) for r in q_img.tolist()}
            for p in ps:
                for q in qs:
                    members.add(decode(QuadCode(code.n, p, q)))
        return frozenset(members)


@lru_cache(maxsize=None)
def group(parity: int) -> SymmetryGroup:
    return SymmetryGroup(parity)


def generator(name: str, parity: int) -> GroupElement:
    return group(parity).generator(name)


def all_elements(parity: int) -> list[GroupElement]:
    return group(parity).elements()


def mul(g: GroupElement, h: GroupElement) -> GroupElement:
    if g.parity != h.parity:
        raise ValueError("cannot multiply elements of different parity")
    return group(g.parity).mul(g, h)


def apply(g: GroupElement, qd: BaseQuadruple) -> BaseQuadruple:
    return group(g.parity).apply(g, qd)


def orbit(qd: BaseQuadruple) -> frozenset[BaseQuadruple]:
    return group(qd.n % 2).orbit(qd)
