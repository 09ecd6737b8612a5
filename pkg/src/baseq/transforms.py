"""Elementary transformations T1-T5 of quadruples (A;B;C;D)."""

from __future__ import annotations

from dataclasses import replace

from .quadcodec import _decode_pair, _encode_pair, code_shape
from .seqcore import BaseQuadruple, alternate, negate, reverse

__all__ = ["t1_negate", "t2_reverse", "t3_swap", "t4_tau", "t5_alternate", "tau"]

_FIELDS = {"A": "a", "B": "b", "C": "c", "D": "d"}


def _field(which: str) -> str:
    try:
        return _FIELDS[which.upper()]
    except KeyError:
        raise ValueError(f"sequence must be one of A, B, C, D, got {which!r}") from None


def t1_negate(qd: BaseQuadruple, which: str) -> BaseQuadruple:
    f = _field(which)
    return replace(qd, **{f: negate(getattr(qd, f))})


def t2_reverse(qd: BaseQuadruple, which: str) -> BaseQuadruple:
    f = _field(which)
    return replace(qd, **{f: reverse(getattr(qd, f))})


def t3_swap(qd: BaseQuadruple, which: str) -> BaseQuadruple:
    which = which.upper()
    if which == "AB":
        return BaseQuadruple(qd.b, qd.a, qd.c, qd.d)
    if which == "CD":
        return BaseQuadruple(qd.a, qd.b, qd.d, qd.c)
    raise ValueError(f"pair must be 'AB' or 'CD', got {which!r}")


def tau(label: int) -> int:
    """The transposition (4 5) on BS-quad labels."""
    return {4: 5, 5: 4}.get(label, label)


def t4_tau(qd: BaseQuadruple) -> BaseQuadruple:
    """Swap BS-quads 4 and 5 throughout (C;D); the central column is kept.

    Raises QuadSumError when a (C;D) quad is not a BS-quad.
    """
    n = qd.n
    _, qk = code_shape(n)
    q = _encode_pair(qd.c, qd.d, qk, "(C;D)")
    q = tuple(tau(lab) if kind == "bs" else lab for lab, kind in zip(q, qk))
    c, d = _decode_pair(q, qk, n)
    return BaseQuadruple(qd.a, qd.b, c, d)


def t5_alternate(qd: BaseQuadruple) -> BaseQuadruple:
    return BaseQuadruple(*(alternate(x) for x in qd))
