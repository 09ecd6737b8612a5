import pytest
from hypothesis import given

from baseq import fixtures
from baseq.enumeration import brute_force_bs
from baseq.quadcodec import BS, QuadSumError, decode, encode, format_code, parse_code, theorem1_check
from baseq.seqcore import BaseQuadruple, is_base_sequences, naf_vector
from baseq.transforms import t1_negate, t2_reverse, t3_swap, t4_tau, t5_alternate, tau
from helpers import quadruples, random_members

EXAMPLE = decode(parse_code("06142;1675", 8))
SINGLE = ([lambda q, w=w: t1_negate(q, w) for w in "ABCD"]
          + [lambda q, w=w: t2_reverse(q, w) for w in "ABCD"]
          + [lambda q: t3_swap(q, "AB"), lambda q: t3_swap(q, "CD"), t4_tau, t5_alternate])


def fixture_members():
    for n, codes in fixtures.representatives().items():
        if n <= 10:
            for c in codes:
                yield decode(parse_code(c, n))


def cd_sum(qd):
    if qd.n == 0:
        return ()
    return (naf_vector(qd.c) + naf_vector(qd.d)).values


@given(quadruples(0, 8))
def test_involutions(qd):
    for w in "ABCD":
        assert t1_negate(t1_negate(qd, w), w) == qd
        assert t2_reverse(t2_reverse(qd, w), w) == qd
    for w in ("AB", "CD"):
        assert t3_swap(t3_swap(qd, w), w) == qd
    assert t5_alternate(t5_alternate(qd)) == qd
    if theorem1_check(qd):
        assert t4_tau(t4_tau(qd)) == qd


def test_negation_keeps_norm():
    out = t1_negate(EXAMPLE, "C")
    assert naf_vector(out.c) == naf_vector(EXAMPLE.c)
    assert out.c != EXAMPLE.c


def test_bad_names():
    with pytest.raises(ValueError):
        t1_negate(EXAMPLE, "E")
    with pytest.raises(ValueError):
        t3_swap(EXAMPLE, "AC")


def test_tau_labels():
    assert [tau(k) for k in range(1, 9)] == [1, 2, 3, 5, 4, 6, 7, 8]


def test_t4_example():
    assert format_code(encode(t4_tau(EXAMPLE))) == "06142;1674"


def test_t4_fixes_codes_without_4_5():
    qd = decode(parse_code("0165;6123", 7))
    assert t4_tau(qd) == qd


def test_t4_keeps_central_column():
    qd = decode(parse_code("0614;1641", 7))
    assert encode(t4_tau(qd)).q == (1, 6, 5, 1)


def test_t4_rejects_theorem1_violation():
    qd = BaseQuadruple.parse("-++++", "+++++", "+-++", "++++")
    with pytest.raises(QuadSumError):
        t4_tau(qd)


def test_swap_cd_relabels_quads():
    # row swap of the 2x2 patterns, recomputed from the patterns themselves
    inv = {pat: lab for lab, pat in BS.items()}
    swapped = {lab: inv[(y, x)] for lab, (x, y) in BS.items()}
    code = encode(EXAMPLE)
    out = encode(t3_swap(EXAMPLE, "CD"))
    assert out.q == tuple(swapped[lab] for lab in code.q)


@pytest.mark.parametrize("qd", list(fixture_members()), ids=str)
def test_fixtures_stay_members(qd):
    for t in SINGLE:
        assert is_base_sequences(t(qd))
    assert cd_sum(t4_tau(qd)) == cd_sum(qd)


@pytest.mark.parametrize("n", range(0, 5))
def test_all_small_members_stay_members(n):
    for qd in brute_force_bs(n):
        for t in SINGLE:
            assert is_base_sequences(t(qd))


def test_t4_law_random_members():
    for n in range(1, 11):
        for qd in random_members(n, 100, seed=4):
            assert cd_sum(t4_tau(qd)) == cd_sum(qd)


def test_alternation_keeps_delta():
    for qd in random_members(9, 50):
        out = t5_alternate(qd)
        total = [sum(naf_vector(x)[i] if i < x.length else 0 for x in out) for i in range(out.n + 1)]
        assert total == [4 * out.n + 2] + [0] * out.n
