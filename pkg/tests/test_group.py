import random

import numpy as np
import pytest

from baseq import fixtures
from baseq.canonical import orbit_image_arrays
from baseq.enumeration import brute_force_bs
from baseq.group import GENERATORS, ORDER, all_elements, apply, generator, group, mul, orbit
from baseq.quadcodec import SKEW, decode, encode, parse_code
from baseq.seqcore import BaseQuadruple, BinarySequence, is_base_sequences
from baseq.transforms import t1_negate
from helpers import random_members

PARITIES = (0, 1)


@pytest.mark.parametrize("parity", PARITIES)
def test_order(parity):
    els = all_elements(parity)
    assert len(els) == ORDER == 4096
    assert len(set(els)) == 4096
    assert group(parity).identity in els


@pytest.mark.parametrize("parity", PARITIES)
def test_generators_are_involutions(parity):
    G = group(parity)
    for g in G.generators:
        assert mul(g, g) == G.identity


@pytest.mark.parametrize("parity", PARITIES)
def test_swap_relation(parity):
    s1, n1, n2 = (generator(x, parity) for x in ("sigma1", "nu1", "nu2"))
    assert mul(s1, n1) == mul(n2, s1)


@pytest.mark.parametrize("parity", PARITIES)
def test_closure_and_associativity(parity):
    G = group(parity)
    C = G.cayley_table.astype(np.int64)
    R = G.right_table.astype(np.int64)
    assert C.min() >= 0 and C.max() < ORDER
    # every row and column is a permutation
    assert (np.sort(C, axis=1) == np.arange(ORDER)).all()
    assert (np.sort(C, axis=0) == np.arange(ORDER)[:, None]).all()
    for j in range(12):
        # (g h) x_j == g (h x_j) for all g, h
        assert (R[C, j] == C[:, R[:, j]]).all()


@pytest.mark.parametrize("parity", PARITIES)
def test_inverse(parity):
    G = group(parity)
    rng = random.Random(parity)
    for _ in range(50):
        g = G.element(rng.randrange(ORDER))
        assert mul(g, G.inverse(g)) == G.identity


def test_parity_mismatch():
    with pytest.raises(ValueError):
        mul(generator("nu1", 0), generator("nu1", 1))
    qd = decode(parse_code("0165;6123", 7))
    with pytest.raises(ValueError):
        apply(generator("nu1", 0), qd)


def test_identity_and_nu1():
    qd = decode(parse_code("0165;6123", 7))
    assert apply(group(1).identity, qd) == qd
    assert apply(generator("nu1", 1), qd) == t1_negate(qd, "A")


@pytest.mark.parametrize("parity", PARITIES)
def test_generator_pairs_against_action(parity):
    # normal-form rewriting of every two-letter word agrees with acting letter by letter
    G = group(parity)
    n = 8 + parity
    qd = random_members(n, 1, seed=11)[0]
    for x in GENERATORS:
        for y in GENERATORS:
            g = G.from_word((x, y))
            want = apply(generator(x, parity), apply(generator(y, parity), qd))
            assert apply(g, qd) == want, (x, y)


@pytest.mark.parametrize("parity", PARITIES)
def test_action_homomorphism(parity):
    G = group(parity)
    rng = random.Random(100 + parity)
    ns = [n for n in range(4, 10) if n % 2 == parity]
    pool = {n: random_members(n, 50, seed=5) for n in ns}
    for _ in range(1000):
        g = G.element(rng.randrange(ORDER))
        h = G.element(rng.randrange(ORDER))
        qd = rng.choice(pool[rng.choice(ns)])
        assert apply(mul(g, h), qd) == apply(g, apply(h, qd))


@pytest.mark.parametrize("n", [4, 5, 7, 8])
def test_every_element_keeps_membership(n):
    qd = random_members(n, 1)[0]
    for g in all_elements(n % 2):
        assert is_base_sequences(apply(g, qd))


@pytest.mark.parametrize("n", [3, 6, 9])
def test_packed_action_matches_reference(n):
    qd = random_members(n, 1, seed=2)[0]
    a, b, c, d = orbit_image_arrays(qd)
    for g in all_elements(n % 2)[::7]:
        out = apply(g, qd)
        k = g.index
        assert (out.a.bits, out.b.bits, out.c.bits, out.d.bits) == (int(a[k]), int(b[k]), int(c[k]), int(d[k]))


@pytest.mark.parametrize("parity", PARITIES)
def test_quadwise_action(parity):
    G = group(parity)
    rng = random.Random(7 + parity)
    for n in [n for n in range(2, 12) if n % 2 == parity]:
        for qd in random_members(n, 10, seed=9):
            code = encode(qd)
            for _ in range(20):
                g = G.element(rng.randrange(ORDER) & ~1)
                img = G.act_on_code(g, code)
                assert img == encode(apply(g, qd))
                # symmetry type of each BS-quad is preserved
                for a, b in zip(code.q[: n // 2], img.q[: n // 2]):
                    assert (a in SKEW) == (b in SKEW)
    with pytest.raises(ValueError):
        G.act_on_code(G.generator("alpha"), encode(random_members(2 + parity, 1)[0]))


def fixture_rows(max_n):
    return [(n, c) for n, cs in fixtures.representatives().items() if n <= max_n for c in cs]


@pytest.mark.parametrize("n,code", fixture_rows(8))
def test_orbit_size_divides_order(n, code):
    size = len(orbit(decode(parse_code(code, n))))
    assert ORDER % size == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_representatives_in_distinct_orbits(n):
    orbits = [orbit(decode(parse_code(c, n))) for c in fixtures.representatives()[n]]
    for i in range(len(orbits)):
        for j in range(i):
            assert not orbits[i] & orbits[j]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orbits_cover_all_members(n):
    members = set(brute_force_bs(n))
    union = set()
    for c in fixtures.representatives()[n]:
        union |= orbit(decode(parse_code(c, n)))
    assert union == members


def test_orbit_rejects_non_members():
    with pytest.raises(ValueError):
        orbit(BaseQuadruple(BinarySequence(0, 3), BinarySequence(0, 3), BinarySequence(0, 2), BinarySequence(0, 2)))


def test_element_fields():
    g = group(0).from_word(("theta", "alpha", "nu1"))
    assert g.s == 1
    assert g.h1 == (1, 0, 0, 0, 0)
    assert g.h2 == (0, 0, 0, 0, 1, 1)   # theta alpha = alpha sigma2 theta for even n
    assert group(1).from_word(("theta", "alpha")).h2 == (0, 0, 0, 0, 0, 1)
    assert str(group(0).identity) == "1"
