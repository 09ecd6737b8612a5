"""Exhaustive enumeration of the equivalence classes of BS(n+1, n).

Every canonical condition involves one half of the code only, so the
canonical representatives are exactly the pairs (p, q) with p a canonical
(A;B) half, q a canonical (C;D) half and

    N_A(i) + N_B(i) = -(N_C(i) + N_D(i)),   1 <= i <= n - 1.

(Lag n only involves A and B and vanishes for every Golay first quad.)
Halves are generated level by level with prefix pruning, materialized as
packed words, keyed by their summed autocorrelations, and joined through
a sorted index of the (C;D) keys.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import product
from typing import Iterator

import numpy as np

from . import packed
from .canonical import SKEW, SYMMETRIC, _first_in, is_canonical, p_mask, q_mask
from .quadcodec import QuadCode, code_shape, decode, format_code, parse_code
from .seqcore import BaseQuadruple, BinarySequence, NafVector, is_base_sequences

__all__ = [
    "HalfTable",
    "ClassReport",
    "ab_halves",
    "cd_halves",
    "enumerate_ab_halves",
    "enumerate_cd_halves",
    "count_classes",
    "is_normal",
    "is_near_normal",
    "is_normal_code",
    "brute_force_bs",
    "MAX_N",
]

MAX_N = 24
_BS_LABELS = np.arange(1, 9, dtype=np.int8)
_CENTRAL_LABELS = np.arange(0, 4, dtype=np.int8)


@dataclass(frozen=True)
class HalfTable:
    """Canonical halves of one side: labels (K, positions) and NAF sums (K, lags)."""

    n: int
    side: str
    labels: np.ndarray
    keys: np.ndarray

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[tuple[tuple[int, ...], NafVector]]:
        for lab, key in zip(self.labels.tolist(), self.keys.tolist()):
            yield tuple(lab), NafVector(tuple(key))


def _prefix_ok(Q: np.ndarray, side: str) -> np.ndarray:
    """First-occurrence conditions, which are decided by any prefix."""
    if side == "p":
        return (np.isin(_first_in(Q, SYMMETRIC), (0, 1, 8))
                & np.isin(_first_in(Q, SKEW), (0, 3, 6)))
    return (np.isin(_first_in(Q, SYMMETRIC), (0, 1))
            & np.isin(_first_in(Q, SKEW), (0, 6))
            & np.isin(_first_in(Q, (2, 7)), (0, 2))
            & np.isin(_first_in(Q, (4, 5)), (0, 4)))


def _expand(prefixes: np.ndarray, choices: np.ndarray) -> np.ndarray:
    k = len(prefixes)
    out = np.empty((k * len(choices), prefixes.shape[1] + 1), dtype=np.int8)
    out[:, :-1] = np.repeat(prefixes, len(choices), axis=0)
    out[:, -1] = np.tile(choices, k)
    return out


def _generate(n: int, side: str, first_quads: tuple[int, ...] | None) -> np.ndarray:
    """Level-wise generation of canonical label rows for one side, in lexicographic order."""
    pk, qk = code_shape(n)
    kinds = pk if side == "p" else qk
    if side == "p":
        rows = np.array([[0 if kinds[0] == "central" else 3]], dtype=np.int8)
        start = 1
    else:
        rows = np.zeros((1, 0), dtype=np.int8)
        start = 0
    quad_cols: list[int] = []
    for i in range(start, len(kinds)):
        if kinds[i] == "bs":
            if not quad_cols and first_quads is not None:
                choices = np.array(first_quads, dtype=np.int8)
            else:
                choices = _BS_LABELS
            rows = _expand(rows, choices)
            quad_cols.append(i)
            rows = rows[_prefix_ok(rows[:, quad_cols], side)]
        else:
            rows = _expand(rows, _CENTRAL_LABELS)
    full = p_mask(rows, n) if side == "p" else q_mask(rows, n)
    return rows[full]


def _first_quad_choices(n: int, side: str) -> tuple[int, ...]:
    if side == "p":
        return (6, 8) if n % 2 == 0 else (1, 6)
    return (1,) if n % 2 == 0 else (1, 6)


def _keys(labels: np.ndarray, kinds, L: int) -> np.ndarray:
    x, y = packed.pair_bits(labels, kinds)
    if L == 0:
        return np.zeros((len(labels), 0), dtype=np.int16)
    return packed.naf_matrix(x, L) + packed.naf_matrix(y, L)


def ab_halves(n: int, prefix: tuple[int, ...] = ()) -> HalfTable:
    """Canonical (A;B) halves, optionally restricted to codes starting with `prefix`.

    Keys hold N_A + N_B at lags 0..n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    labels = _generate(n, "p", _first_quad_choices(n, "p"))
    if prefix:
        k = len(prefix)
        labels = labels[(labels[:, :k] == np.array(prefix, dtype=np.int8)).all(axis=1)]
    return HalfTable(n, "p", labels, _keys(labels, code_shape(n)[0], n + 1))


def cd_halves(n: int) -> HalfTable:
    """Canonical (C;D) halves with keys N_C + N_D at lags 0..n-1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    labels = _generate(n, "q", _first_quad_choices(n, "q"))
    return HalfTable(n, "q", labels, _keys(labels, code_shape(n)[1], n))


def enumerate_ab_halves(n: int) -> Iterator[tuple[tuple[int, ...], NafVector]]:
    return iter(ab_halves(n))


def enumerate_cd_halves(n: int) -> dict[NafVector, list[tuple[int, ...]]]:
    """Multimap from N_C + N_D to the canonical q-halves having it."""
    out: dict[NafVector, list[tuple[int, ...]]] = {}
    for lab, key in cd_halves(n):
        out.setdefault(key, []).append(lab)
    return out


def _as_rows(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int16)
    return a.view(np.dtype((np.void, a.dtype.itemsize * a.shape[1]))).ravel()


def _join(n: int, ab: HalfTable, cd: HalfTable) -> tuple[np.ndarray, np.ndarray]:
    """Index pairs (i_ab, i_cd) whose NAF sums cancel at every lag 1..n."""
    if len(ab) == 0 or len(cd) == 0:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    if n >= 1 and np.any(ab.keys[:, n] != 0):
        raise AssertionError("N_A(n) + N_B(n) must vanish for a Golay first quad")
    if n <= 1:
        i_ab = np.repeat(np.arange(len(ab)), len(cd))
        i_cd = np.tile(np.arange(len(cd)), len(ab))
        return i_ab, i_cd
    want = _as_rows(-ab.keys[:, 1:n])
    have = _as_rows(cd.keys[:, 1:n])
    order = np.argsort(have, kind="stable")
    sorted_have = have[order]
    lo = np.searchsorted(sorted_have, want, side="left")
    hi = np.searchsorted(sorted_have, want, side="right")
    counts = hi - lo
    i_ab = np.repeat(np.arange(len(ab)), counts)
    starts = np.repeat(lo, counts)
    offsets = np.arange(counts.sum()) - np.repeat(np.cumsum(counts) - counts, counts)
    i_cd = order[starts + offsets]
    return i_ab, i_cd


def is_normal_code(code: QuadCode) -> bool:
    """Normality read off the (A;B) code of a canonical representative."""
    pk, _ = code_shape(code.n)
    for lab, kind in zip(code.p, pk):
        if kind == "bs" and lab not in (1, 3, 6, 8):
            return False
        if kind == "central" and lab not in (0, 3):
            return False
    return True


def is_normal(qd: BaseQuadruple) -> bool:
    """b_i = a_i for i = 1..n."""
    n = qd.n
    return all(qd.a[i] == qd.b[i] for i in range(n))


def is_near_normal(qd: BaseQuadruple) -> bool:
    """b_i = (-1)^(i-1) a_i for i = 1..n."""
    n = qd.n
    return all(qd.b[i] == (-1) ** i * qd.a[i] for i in range(n))


@dataclass(frozen=True)
class ClassReport:
    n: int
    class_count: int
    normal_count: int
    codes: tuple[str, ...]

    def summary(self) -> str:
        return f"n={self.n} classes={self.class_count} normal={self.normal_count}"

    def to_text(self) -> str:
        return "".join(c + "\n" for c in self.codes)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "index", "p", "q", "normal"])
        for k, c in enumerate(self.codes, start=1):
            p, q = c.split(";")
            normal = is_normal_code(parse_code(c, self.n))
            w.writerow([self.n, k, p, q, int(normal)])
        return buf.getvalue()

    def to_json(self) -> str:
        d = asdict(self)
        d["codes"] = list(self.codes)
        return json.dumps(d, indent=2) + "\n"

    def format(self, fmt: str) -> str:
        if fmt == "text":
            return self.to_text()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


# worker state for the process pool: the frozen (C;D) table
_CD: HalfTable | None = None


def _init_worker(cd: HalfTable):
    global _CD
    _CD = cd


def _join_shard(n: int, prefix: tuple[int, ...], cd: HalfTable | None = None) -> list[str]:
    cd = cd if cd is not None else _CD
    ab = ab_halves(n, prefix)
    i_ab, i_cd = _join(n, ab, cd)
    codes = []
    for i, j in zip(i_ab.tolist(), i_cd.tolist()):
        code = QuadCode(n, tuple(ab.labels[i].tolist()), tuple(cd.labels[j].tolist()))
        if not is_canonical(code):
            raise AssertionError(f"joined code {format_code(code)} is not canonical")
        codes.append(format_code(code))
    return codes


def _shards(n: int) -> list[tuple[int, ...]]:
    """Prefixes (p1, p2[, p3]) splitting the (A;B) side, in lexicographic order."""
    pk, _ = code_shape(n)
    if len(pk) < 2 or pk[1] != "bs":
        return [()]
    first = (3,)
    seconds = _first_quad_choices(n, "p")
    if len(pk) >= 3 and pk[2] == "bs":
        return [first + (s, t) for s in seconds for t in range(1, 9)]
    return [first + (s,) for s in seconds]


def count_classes(n: int, jobs: int = 1, verify: bool = False) -> ClassReport:
    """Canonical representatives of every class of BS(n+1, n).

    With ``verify`` every representative is decoded and re-checked for
    membership in BS(n+1, n).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    cd = cd_halves(n)
    shards = _shards(n)
    if jobs <= 1 or len(shards) == 1:
        parts = [_join_shard(n, s, cd) for s in shards]
    else:
        with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                                 initargs=(cd,)) as pool:
            parts = list(pool.map(_join_shard, [n] * len(shards), shards))
    codes = sorted(c for part in parts for c in part)
    if verify:
        for c in codes:
            if not is_base_sequences(decode(parse_code(c, n))):
                raise AssertionError(f"{c} does not decode to base sequences")
    normal = sum(is_normal_code(parse_code(c, n)) for c in codes)
    return ClassReport(n, len(codes), normal, tuple(codes))


def brute_force_bs(n: int) -> list[BaseQuadruple]:
    """Every member of BS(n+1, n), found by checking all 2^(4n+2) sign choices."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > 6:
        raise ValueError(f"brute force over 2^{4 * n + 2} quadruples is limited to n <= 6")
    L = n + 1
    seq_l = np.arange(1 << L, dtype=packed.WORD)
    seq_n = np.arange(1 << n, dtype=packed.WORD)
    naf_l = packed.naf_matrix(seq_l, L)
    naf_n = packed.naf_matrix(seq_n, n) if n else np.zeros((1, 0), dtype=np.int16)
    # every (A, B) and every (C, D), lags 1..n
    ab = (naf_l[:, None, 1:] + naf_l[None, :, 1:]).reshape(len(seq_l) ** 2, n)
    cd = np.zeros((len(seq_n) ** 2, n), dtype=np.int16)
    if n:
        cd[:, : n - 1] = (naf_n[:, None, 1:] + naf_n[None, :, 1:]).reshape(len(cd), n - 1)
    found = []
    chunk = max(1, (1 << 22) // max(1, len(cd)))
    for s in range(0, len(ab), chunk):
        block = ab[s:s + chunk]
        hit = (block[:, None, :] + cd[None, :, :] == 0).all(axis=2)
        for i, j in zip(*np.nonzero(hit)):
            i += s
            a, b = divmod(int(i), 1 << L)
            c, d = divmod(int(j), 1 << n)
            found.append(BaseQuadruple(BinarySequence(a, L), BinarySequence(b, L),
                                       BinarySequence(c, n), BinarySequence(d, n)))
    return sorted(found, key=BaseQuadruple.key)


def all_codes(n: int, side: str) -> np.ndarray:
    """Every label row of one side (no pruning), for cross-checking the generator."""
    pk, qk = code_shape(n)
    kinds = pk if side == "p" else qk
    alph = {"golay": range(1, 9), "bs": range(1, 9), "central": range(4)}
    rows = list(product(*(alph[k] for k in kinds)))
    return np.array(rows, dtype=np.int8).reshape(len(rows), len(kinds))
