"""Shared strategies and sample data for the tests."""

import random

from hypothesis import strategies as st

from baseq.enumeration import count_classes
from baseq.quadcodec import decode, parse_code
from baseq.seqcore import BaseQuadruple, BinarySequence


def sequences(min_len=0, max_len=20):
    return st.integers(min_len, max_len).flatmap(
        lambda L: st.integers(0, (1 << L) - 1).map(lambda b: BinarySequence(b, L)))


def quadruples(min_n=0, max_n=8):
    def build(n):
        return st.tuples(*(st.integers(0, (1 << L) - 1) for L in (n + 1, n + 1, n, n))).map(
            lambda k: BaseQuadruple.from_key((n,) + k))
    return st.integers(min_n, max_n).flatmap(build)


_REPS = {}


def representatives(n):
    """Canonical representatives of BS(n+1, n) as decoded quadruples."""
    if n not in _REPS:
        _REPS[n] = [decode(parse_code(c, n)) for c in count_classes(n).codes]
    return _REPS[n]


def random_members(n, k, seed=0):
    """k random members of BS(n+1, n): random group images of representatives."""
    from baseq.group import ORDER, apply, group
    rng = random.Random(seed * 1000 + n)
    G = group(n % 2)
    reps = representatives(n)
    return [apply(G.element(rng.randrange(ORDER)), rng.choice(reps)) for _ in range(k)]


# criterion number -> "PASS ..." / "FAIL ..." line, filled by test_acceptance
ACCEPTANCE = {}
