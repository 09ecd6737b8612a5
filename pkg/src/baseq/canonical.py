"""Canonical form of base sequences BS(n+1, n).

The canonical form is a predicate on codes made of eleven conditions, each
involving only the (A;B) half or only the (C;D) half.  Two routes find the
canonical member of an equivalence class:

* :func:`canonicalize` uses the quad-wise action of the alpha-free
  subgroup on codes, applied to S and to alpha(S); the two halves are
  searched independently (32 images of p, 64 images of q).
* :func:`canonical_oracle` applies all 4096 group elements to the packed
  sequences, re-encodes every image and keeps the canonical ones.

Both insist on exactly one survivor.
"""

from __future__ import annotations

import numpy as np

from . import packed
from .group import ALPHA, NU1, NU2, NU3, NU4, RHO1, RHO2, RHO3, RHO4, SIGMA1, SIGMA2, THETA
from .group import ORDER, group
from .quadcodec import SKEW, SYMMETRIC, QuadCode, code_shape, decode, encode
from .seqcore import BaseQuadruple, BinarySequence, is_base_sequences
from .transforms import t5_alternate

__all__ = [
    "CanonicalFormError",
    "p_conditions",
    "q_conditions",
    "is_canonical",
    "p_mask",
    "q_mask",
    "canonicalize",
    "canonical_code",
    "canonical_oracle",
    "canonical_members",
]


class CanonicalFormError(RuntimeError):
    """An orbit with zero or several canonical members."""


def _first(labels, group_):
    for lab in labels:
        if lab in group_:
            return lab
    return None


def p_conditions(p, n: int) -> bool:
    """Conditions (i)-(iv) on the (A;B) labels."""
    if n == 0:
        return p[0] == 0
    if p[0] != 3:
        return False
    kinds = code_shape(n)[0]
    quads = [lab for lab, k in zip(p, kinds) if k == "bs"]
    if quads and quads[0] not in ((6, 8) if n % 2 == 0 else (1, 6)):
        return False
    if _first(quads, SYMMETRIC) not in (None, 1, 8):
        return False
    if _first(quads, SKEW) not in (None, 3, 6):
        return False
    if n % 2 == 0 and all(lab in SKEW for lab in quads) and p[-1] not in (0, 3):
        return False
    return True


def q_conditions(q, n: int) -> bool:
    """Conditions (v)-(xi) on the (C;D) labels."""
    if n == 0:
        return True
    m = n // 2
    quads = list(q[:m])
    if quads and quads[0] not in ((1,) if n % 2 == 0 else (1, 6)):
        return False
    if _first(quads, SYMMETRIC) not in (None, 1):
        return False
    if _first(quads, SKEW) not in (None, 6):
        return False
    if _first(quads, (2, 7)) not in (None, 2):
        return False
    if _first(quads, (4, 5)) not in (None, 4):
        return False
    if n % 2 == 1:
        central = q[m]
        if all(lab not in (2, 7) for lab in quads) and central == 2:
            return False
        if all(lab in SKEW for lab in quads) and central != 0:
            return False
    return True


def is_canonical(code: QuadCode) -> bool:
    return p_conditions(code.p, code.n) and q_conditions(code.q, code.n)


# vectorized versions over label arrays of shape (K, len)

def _first_in(Q: np.ndarray, members) -> np.ndarray:
    """Label of the first entry of each row lying in `members`, 0 if none."""
    if Q.shape[1] == 0:
        return np.zeros(len(Q), dtype=Q.dtype)
    hit = np.isin(Q, list(members))
    vals = Q[np.arange(len(Q)), np.argmax(hit, axis=1)]
    return np.where(hit.any(axis=1), vals, 0)


def p_mask(P: np.ndarray, n: int) -> np.ndarray:
    P = np.asarray(P)
    if n == 0:
        return P[:, 0] == 0
    kinds = code_shape(n)[0]
    ok = P[:, 0] == 3
    quads = P[:, [i for i, k in enumerate(kinds) if k == "bs"]]
    if quads.shape[1]:
        ok &= np.isin(quads[:, 0], (6, 8) if n % 2 == 0 else (1, 6))
    ok &= np.isin(_first_in(quads, SYMMETRIC), (0, 1, 8))
    ok &= np.isin(_first_in(quads, SKEW), (0, 3, 6))
    if n % 2 == 0:
        all_skew = np.isin(quads, list(SKEW)).all(axis=1)
        ok &= ~all_skew | np.isin(P[:, -1], (0, 3))
    return ok


def q_mask(Q: np.ndarray, n: int) -> np.ndarray:
    Q = np.asarray(Q)
    ok = np.ones(len(Q), dtype=bool)
    if n == 0:
        return ok
    m = n // 2
    quads = Q[:, :m]
    if m:
        ok &= np.isin(quads[:, 0], (1,) if n % 2 == 0 else (1, 6))
    ok &= np.isin(_first_in(quads, SYMMETRIC), (0, 1))
    ok &= np.isin(_first_in(quads, SKEW), (0, 6))
    ok &= np.isin(_first_in(quads, (2, 7)), (0, 2))
    ok &= np.isin(_first_in(quads, (4, 5)), (0, 4))
    if n % 2 == 1:
        central = Q[:, m]
        ok &= ~(~np.isin(quads, (2, 7)).any(axis=1) & (central == 2))
        ok &= ~(np.isin(quads, list(SKEW)).all(axis=1) & (central != 0))
    return ok


def _unique_rows(a: np.ndarray) -> list[tuple[int, ...]]:
    return sorted({tuple(r) for r in a.tolist()})


def canonical_members(qd: BaseQuadruple) -> list[QuadCode]:
    """Codes of all canonical members of the class of `qd` (quad-wise route)."""
    n = qd.n
    G = group(n % 2)
    found = set()
    for start in (qd, t5_alternate(qd)):
        code = encode(start)
        p_img, q_img = G.half_images(code)
        ps = _unique_rows(p_img[p_mask(p_img, n)])
        qs = _unique_rows(q_img[q_mask(q_img, n)])
        found.update((p, q) for p in ps for q in qs)
    return [QuadCode(n, p, q) for p, q in sorted(found)]


def canonical_code(qd: BaseQuadruple) -> QuadCode:
    if not is_base_sequences(qd):
        raise ValueError("canonical form is defined on BS(n+1, n) members only")
    found = canonical_members(qd)
    if len(found) != 1:
        raise CanonicalFormError(
            f"class of {qd} has {len(found)} canonical members: {[str(c) for c in found]}")
    return found[0]


def canonicalize(qd: BaseQuadruple) -> BaseQuadruple:
    return decode(canonical_code(qd))


# ---- oracle: brute force over all 4096 elements on packed sequences ----

def _orbit_arrays(qd: BaseQuadruple):
    """Images of qd under every element index 0..4095 as packed arrays."""
    n = qd.n
    L = n + 1
    idx = np.arange(ORDER)
    a = np.full(ORDER, qd.a.bits, dtype=packed.WORD)
    b = np.full(ORDER, qd.b.bits, dtype=packed.WORD)
    c = np.full(ORDER, qd.c.bits, dtype=packed.WORD)
    d = np.full(ORDER, qd.d.bits, dtype=packed.WORD)
    # words act right to left: highest generator index first
    for j in reversed(range(12)):
        sel = ((idx >> j) & 1).astype(bool)
        if j == THETA:
            t = packed.tau_mask(c[sel], d[sel], n)
            c[sel] ^= t
            d[sel] ^= t
        elif j == SIGMA2:
            c[sel], d[sel] = d[sel], c[sel]
        elif j in (NU3, NU4):
            x = c if j == NU3 else d
            x[sel] = packed.negate(x[sel], n)
        elif j in (RHO3, RHO4):
            x = c if j == RHO3 else d
            x[sel] = packed.reverse(x[sel], n)
        elif j == SIGMA1:
            a[sel], b[sel] = b[sel], a[sel]
        elif j in (NU1, NU2):
            x = a if j == NU1 else b
            x[sel] = packed.negate(x[sel], L)
        elif j in (RHO1, RHO2):
            x = a if j == RHO1 else b
            x[sel] = packed.reverse(x[sel], L)
        elif j == ALPHA:
            a[sel] = packed.alternate(a[sel], L)
            b[sel] = packed.alternate(b[sel], L)
            c[sel] = packed.alternate(c[sel], n)
            d[sel] = packed.alternate(d[sel], n)
    return a, b, c, d


def orbit_image_arrays(qd: BaseQuadruple):
    """Packed (a, b, c, d) arrays of the 4096 images, indexed by element."""
    return _orbit_arrays(qd)


def canonical_oracle(qd: BaseQuadruple) -> BaseQuadruple:
    """Sweep all 4096 group elements and return the single canonical image."""
    if not is_base_sequences(qd):
        raise ValueError("canonical form is defined on BS(n+1, n) members only")
    n = qd.n
    a, b, c, d = _orbit_arrays(qd)
    pk, qk = code_shape(n)
    P = packed.pair_labels(a, b, pk)
    Q = packed.pair_labels(c, d, qk)
    ok = p_mask(P, n) & q_mask(Q, n)
    keys = sorted({(int(a[k]), int(b[k]), int(c[k]), int(d[k])) for k in np.nonzero(ok)[0]})
    if len(keys) != 1:
        raise CanonicalFormError(f"orbit of {qd} has {len(keys)} canonical members")
    ka, kb, kc, kd = keys[0]
    return BaseQuadruple(BinarySequence(ka, n + 1), BinarySequence(kb, n + 1),
                         BinarySequence(kc, n), BinarySequence(kd, n))
