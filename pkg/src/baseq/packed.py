"""Vectorized operations on arrays of packed +/-1 sequences.

Every sequence of a batch shares the same length L and is stored as an
unsigned 64-bit word, bit k set when element k is -1.
"""

from __future__ import annotations

import numpy as np

from .quadcodec import BS, CENTRAL, GOLAY

WORD = np.uint64


def mask(L: int) -> np.uint64:
    return WORD((1 << L) - 1)


def odd_mask(L: int) -> np.uint64:
    return WORD(sum(1 << k for k in range(1, L, 2)))


def negate(x, L):
    return x ^ mask(L)


def reverse(x, L):
    x = np.asarray(x, dtype=WORD)
    out = np.zeros_like(x)
    one = WORD(1)
    for k in range(L):
        out |= ((x >> WORD(k)) & one) << WORD(L - 1 - k)
    return out


def alternate(x, L):
    return x ^ odd_mask(L)


def naf(x, L: int, i: int) -> np.ndarray:
    if i >= L:
        return np.zeros(np.shape(x), dtype=np.int16)
    mis = (x ^ (x >> WORD(i))) & mask(L - i)
    return (L - i) - 2 * np.bitwise_count(mis).astype(np.int16)


def naf_matrix(x, L: int) -> np.ndarray:
    """Autocorrelations at lags 0..L-1, shape (K, L), int16."""
    x = np.asarray(x, dtype=WORD)
    out = np.empty(x.shape + (L,), dtype=np.int16)
    for i in range(L):
        out[..., i] = naf(x, L, i)
    return out


def tau_mask(c, d, L: int):
    """Bits of (C;D) covered by quads labelled 4 or 5 (both columns, both rows)."""
    return (c ^ reverse(c, L)) & (d ^ reverse(d, L)) & (c ^ d)


# quad pattern index: bit0 = x_i, bit1 = x_mirror, bit2 = y_i, bit3 = y_mirror
# (bit set for -1); value = BS label, or minus the Golay label

def _pattern_index(pat) -> int:
    (x0, x1), (y0, y1) = pat
    return sum(1 << k for k, s in enumerate((x0, x1, y0, y1)) if s == -1)


QUAD_LABEL = np.zeros(16, dtype=np.int8)
for _lab, _pat in BS.items():
    QUAD_LABEL[_pattern_index(_pat)] = _lab
for _lab, _pat in GOLAY.items():
    QUAD_LABEL[_pattern_index(_pat)] = -_lab
CENTRAL_LABEL = np.zeros(4, dtype=np.int8)
for _lab, (_x, _y) in CENTRAL.items():
    CENTRAL_LABEL[(_x == -1) | ((_y == -1) << 1)] = _lab

_BS_INDEX = np.zeros(9, dtype=np.int64)
for _lab, _pat in BS.items():
    _BS_INDEX[_lab] = _pattern_index(_pat)
_GOLAY_INDEX = np.zeros(9, dtype=np.int64)
for _lab, _pat in GOLAY.items():
    _GOLAY_INDEX[_lab] = _pattern_index(_pat)
_CENTRAL_INDEX = np.zeros(4, dtype=np.int64)
for _lab, (_x, _y) in CENTRAL.items():
    _CENTRAL_INDEX[_lab] = (_x == -1) | ((_y == -1) << 1)


def _bit(x, k):
    return ((x >> WORD(k)) & WORD(1)).astype(np.int64)


def pair_labels(x, y, kinds) -> np.ndarray:
    """Labels of a batch of pairs, shape (K, len(kinds)).

    A quad whose alphabet differs from the expected kind gets the negated
    label of the alphabet it does belong to, so any negative entry marks a
    violation of the entry-sum rule.
    """
    L = len(kinds) * 2 - (1 if kinds and kinds[-1] == "central" else 0)
    x = np.asarray(x, dtype=WORD)
    y = np.asarray(y, dtype=WORD)
    out = np.empty(x.shape + (len(kinds),), dtype=np.int8)
    for i, kind in enumerate(kinds):
        if kind == "central":
            out[..., i] = CENTRAL_LABEL[_bit(x, i) | (_bit(y, i) << 1)]
        else:
            j = L - 1 - i
            idx = _bit(x, i) | (_bit(x, j) << 1) | (_bit(y, i) << 2) | (_bit(y, j) << 3)
            raw = QUAD_LABEL[idx]
            out[..., i] = -raw if kind == "golay" else raw
    return out


def pair_bits(labels: np.ndarray, kinds) -> tuple[np.ndarray, np.ndarray]:
    """Materialize a batch of pairs from label arrays of shape (K, len(kinds))."""
    labels = np.asarray(labels)
    L = len(kinds) * 2 - (1 if kinds and kinds[-1] == "central" else 0)
    x = np.zeros(labels.shape[:-1], dtype=WORD)
    y = np.zeros(labels.shape[:-1], dtype=WORD)
    for i, kind in enumerate(kinds):
        lab = labels[..., i].astype(np.int64)
        if kind == "central":
            idx = _CENTRAL_INDEX[lab]
            x |= (idx & 1).astype(WORD) << WORD(i)
            y |= ((idx >> 1) & 1).astype(WORD) << WORD(i)
            continue
        idx = (_GOLAY_INDEX if kind == "golay" else _BS_INDEX)[lab]
        j = L - 1 - i
        x |= ((idx & 1).astype(WORD) << WORD(i)) | (((idx >> 1) & 1).astype(WORD) << WORD(j))
        y |= (((idx >> 2) & 1).astype(WORD) << WORD(i)) | (((idx >> 3) & 1).astype(WORD) << WORD(j))
    return x, y
