"""Quad decomposition of sequence pairs and the symbol encoding of quadruples.

A pair (X;Y) of equal length L is cut into quads

    [ x_i  x_{L+1-i} ]
    [ y_i  y_{L+1-i} ]      i = 1 .. L // 2

plus a central column [x_{k}; y_{k}] when L is odd.  The 16 possible quads
split into 8 Golay quads (entry sum = 2 mod 4) and 8 BS-quads (entry sum
= 0 mod 4).  In BS(n+1, n) the first quad of (A;B) is a Golay quad and all
other quads are BS-quads.

Codes store integer labels; the kind of each position (golay, bs or
central) is fixed by n, see :func:`code_shape`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

from .seqcore import BaseQuadruple, BinarySequence

__all__ = [
    "GOLAY",
    "BS",
    "CENTRAL",
    "SYMMETRIC",
    "SKEW",
    "QuadSymbol",
    "QuadCode",
    "CodeError",
    "QuadSumError",
    "code_shape",
    "quad_at",
    "central_at",
    "encode",
    "decode",
    "theorem1_check",
    "parse_code",
    "format_code",
    "symmetry_type",
]

Kind = Literal["golay", "bs", "central"]

P, M = 1, -1

# label -> ((x_i, x_{L+1-i}), (y_i, y_{L+1-i}))
GOLAY = {
    1: ((M, P), (P, P)),
    2: ((P, M), (P, P)),
    3: ((P, P), (P, M)),
    4: ((P, P), (M, P)),
    5: ((P, M), (M, M)),
    6: ((M, P), (M, M)),
    7: ((M, M), (M, P)),
    8: ((M, M), (P, M)),
}
BS = {
    1: ((P, P), (P, P)),
    2: ((P, P), (M, M)),
    3: ((M, P), (M, P)),
    4: ((P, M), (M, P)),
    5: ((M, P), (P, M)),
    6: ((P, M), (P, M)),
    7: ((M, M), (P, P)),
    8: ((M, M), (M, M)),
}
# label -> (x_k, y_k)
CENTRAL = {0: (P, P), 1: (P, M), 2: (M, P), 3: (M, M)}

SYMMETRIC = frozenset({1, 2, 7, 8})
SKEW = frozenset({3, 4, 5, 6})

_ALPHABET = {"golay": GOLAY, "bs": BS, "central": CENTRAL}
_PATTERN_TO_QUAD = {pat: ("golay", lab) for lab, pat in GOLAY.items()}
_PATTERN_TO_QUAD.update({pat: ("bs", lab) for lab, pat in BS.items()})
_COLUMN_TO_CENTRAL = {col: lab for lab, col in CENTRAL.items()}


class CodeError(ValueError):
    """Malformed or out-of-alphabet quad code."""


class QuadSumError(ValueError):
    """A quad has the wrong entry sum mod 4 for its position."""

    def __init__(self, pair: str, index: int, found: str):
        self.pair = pair
        self.index = index
        super().__init__(f"quad {index} of pair {pair} is a {found} quad")


@dataclass(frozen=True, slots=True)
class QuadSymbol:
    kind: Kind
    label: int

    def __post_init__(self):
        if self.kind not in _ALPHABET:
            raise CodeError(f"unknown symbol kind {self.kind!r}")
        if self.label not in _ALPHABET[self.kind]:
            raise CodeError(f"label {self.label} not in the {self.kind} alphabet")

    @property
    def pattern(self):
        return _ALPHABET[self.kind][self.label]

    def __str__(self) -> str:
        return _symbol_text(self.kind, self.label)


def code_shape(n: int) -> tuple[tuple[Kind, ...], tuple[Kind, ...]]:
    """Kinds of the p (pair A;B) and q (pair C;D) positions for a given n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    m = n // 2
    if n == 0:
        return ("central",), ()
    if n % 2 == 0:
        return ("golay",) + ("bs",) * (m - 1) + ("central",), ("bs",) * m
    return ("golay",) + ("bs",) * m, ("bs",) * m + ("central",)


@dataclass(frozen=True, slots=True)
class QuadCode:
    """Symbol code of a quadruple in BS(n+1, n): labels for (A;B) and (C;D)."""

    n: int
    p: tuple[int, ...]
    q: tuple[int, ...]

    def __post_init__(self):
        pk, qk = code_shape(self.n)
        if len(self.p) != len(pk) or len(self.q) != len(qk):
            raise CodeError(
                f"n={self.n} needs {len(pk)} p-symbols and {len(qk)} q-symbols, "
                f"got {len(self.p)} and {len(self.q)}")
        for half, labels, kinds in (("p", self.p, pk), ("q", self.q, qk)):
            for i, (lab, kind) in enumerate(zip(labels, kinds), start=1):
                if lab not in _ALPHABET[kind]:
                    raise CodeError(f"{half}{i}={lab} is not a valid {kind} label")

    @property
    def p_symbols(self) -> tuple[QuadSymbol, ...]:
        return tuple(QuadSymbol(k, lab) for k, lab in zip(code_shape(self.n)[0], self.p))

    @property
    def q_symbols(self) -> tuple[QuadSymbol, ...]:
        return tuple(QuadSymbol(k, lab) for k, lab in zip(code_shape(self.n)[1], self.q))

    def __str__(self) -> str:
        return format_code(self)


def _pair_check(x: BinarySequence, y: BinarySequence) -> int:
    if len(x) != len(y):
        raise ValueError("pair sequences must have equal length")
    return len(x)


def quad_at(pair: tuple[BinarySequence, BinarySequence], i: int) -> QuadSymbol:
    """Quad i (1-based) of a pair, labelled in whichever alphabet it belongs to."""
    x, y = pair
    L = _pair_check(x, y)
    if not 1 <= i <= L // 2:
        raise IndexError(f"quad index {i} out of range 1..{L // 2}")
    j = L - i
    kind, lab = _PATTERN_TO_QUAD[((x[i - 1], x[j]), (y[i - 1], y[j]))]
    return QuadSymbol(kind, lab)


def central_at(pair: tuple[BinarySequence, BinarySequence]) -> QuadSymbol:
    x, y = pair
    L = _pair_check(x, y)
    if L % 2 == 0:
        raise ValueError("even-length pair has no central column")
    k = L // 2
    return QuadSymbol("central", _COLUMN_TO_CENTRAL[(x[k], y[k])])


def _encode_pair(x, y, kinds, name) -> tuple[int, ...]:
    L = len(x)
    labels = []
    for i, want in enumerate(kinds, start=1):
        if want == "central":
            sym = central_at((x, y))
        else:
            sym = quad_at((x, y), i)
            if sym.kind != want:
                raise QuadSumError(name, i, sym.kind)
        labels.append(sym.label)
    assert len(labels) == (L + 1) // 2
    return tuple(labels)


def encode(qd: BaseQuadruple) -> QuadCode:
    n = qd.n
    pk, qk = code_shape(n)
    p = _encode_pair(qd.a, qd.b, pk, "(A;B)")
    q = _encode_pair(qd.c, qd.d, qk, "(C;D)")
    return QuadCode(n, p, q)


def _decode_pair(labels, kinds, L) -> tuple[BinarySequence, BinarySequence]:
    x = [0] * L
    y = [0] * L
    for i, (lab, kind) in enumerate(zip(labels, kinds)):
        if kind == "central":
            x[i], y[i] = CENTRAL[lab]
        else:
            (x[i], x[L - 1 - i]), (y[i], y[L - 1 - i]) = _ALPHABET[kind][lab]
    return BinarySequence.from_signs(x), BinarySequence.from_signs(y)


def decode(code: QuadCode) -> BaseQuadruple:
    n = code.n
    pk, qk = code_shape(n)
    a, b = _decode_pair(code.p, pk, n + 1)
    c, d = _decode_pair(code.q, qk, n)
    return BaseQuadruple(a, b, c, d)


def theorem1_check(qd: BaseQuadruple) -> bool:
    """First (A;B) quad sums to 2 mod 4, every other quad to 0 mod 4."""
    for k, (x, y) in enumerate(((qd.a, qd.b), (qd.c, qd.d))):
        L = len(x)
        for i in range(L // 2):
            j = L - 1 - i
            s = x[i] + x[j] + y[i] + y[j]
            want = 2 if (k == 0 and i == 0) else 0
            if s % 4 != want:
                return False
    return True


def _symbol_text(kind: str, label: int) -> str:
    if kind == "golay":
        return "0" if label == 3 else f"{label}'"
    return str(label)


def format_code(code: QuadCode) -> str:
    pk, qk = code_shape(code.n)
    p = "".join(_symbol_text(k, lab) for k, lab in zip(pk, code.p))
    q = "".join(_symbol_text(k, lab) for k, lab in zip(qk, code.q))
    return f"{p};{q}"


_TOKEN = re.compile(r"\d'?")


def _parse_half(text: str, kinds, half: str) -> tuple[int, ...]:
    tokens = _TOKEN.findall(text)
    if "".join(tokens) != text:
        raise CodeError(f"unexpected characters in {half}-part {text!r}")
    if len(tokens) != len(kinds):
        raise CodeError(f"{half}-part {text!r} has {len(tokens)} symbols, expected {len(kinds)}")
    labels = []
    for i, (tok, kind) in enumerate(zip(tokens, kinds), start=1):
        if kind == "golay":
            if tok == "0":
                lab = 3
            elif tok.endswith("'"):
                lab = int(tok[0])
            else:
                raise CodeError(f"{half}{i}={tok!r} must be a Golay quad ('0' or 1'..8')")
        else:
            if tok.endswith("'"):
                raise CodeError(f"{half}{i}={tok!r}: Golay quad not allowed here")
            lab = int(tok)
        if lab not in _ALPHABET[kind]:
            raise CodeError(f"{half}{i}={tok!r} is not a valid {kind} label")
        labels.append(lab)
    return tuple(labels)


def parse_code(text: str, n: int) -> QuadCode:
    """Parse ``"06142;1675"`` (or the table form ``"06142 1675"``) for a given n."""
    text = text.strip()
    if ";" in text:
        p_txt, q_txt = text.split(";", 1)
        p_txt = p_txt.strip()
        q_txt = q_txt.strip()
    else:
        parts = text.split()
        if len(parts) == 2:
            p_txt, q_txt = parts
        elif len(parts) == 1 and n == 0:
            p_txt, q_txt = parts[0], ""
        else:
            raise CodeError(f"missing ';' separator in {text!r}")
    pk, qk = code_shape(n)
    return QuadCode(n, _parse_half(p_txt, pk, "p"), _parse_half(q_txt, qk, "q"))


def symmetry_type(sym: QuadSymbol) -> str:
    """'symmetric' when both columns of the BS-quad agree, else 'skew'."""
    if sym.kind != "bs":
        raise ValueError(f"symmetry type is defined for BS-quads only, got {sym.kind}")
    return "symmetric" if sym.label in SYMMETRIC else "skew"
