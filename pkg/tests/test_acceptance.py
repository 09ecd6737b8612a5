"""Acceptance gate: one check per criterion, each reporting a PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly as a
script.
"""

import random
import subprocess
import sys
import time

import numpy as np

from baseq import fixtures
from baseq.canonical import canonical_oracle, is_canonical
from baseq.enumeration import brute_force_bs, count_classes
from baseq.group import ORDER, _act_generator, all_elements, apply, group, mul
from baseq.normeq import U, V, SignPolynomial, composed_product, negrev_equivalent, same_norm
from baseq.quadcodec import decode, encode, format_code, parse_code
from baseq.seqcore import naf_vector
from baseq.transforms import t4_tau
from helpers import ACCEPTANCE, random_members


COUNTS = fixtures.class_counts()
REPS = fixtures.representatives()


def report(k, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}"
    ACCEPTANCE[k] = line
    print(line)
    assert ok, line


_REPORTS = {}


def reports():
    if not _REPORTS:
        for n in range(14):
            t = time.perf_counter()
            r = count_classes(n)
            _REPORTS[n] = (r, time.perf_counter() - t)
    return _REPORTS


def test_1_class_counts():
    rs = reports()
    bad = [n for n in range(14) if rs[n][0].class_count != COUNTS[n][0]]
    slow = [n for n in range(11) if rs[n][1] >= 1.0] + ([13] if rs[13][1] >= 120 else [])
    got = ",".join(str(rs[n][0].class_count) for n in range(14))
    report(1, not bad and not slow,
           f"class counts n=0..13 [{got}] mismatches={bad} over-time={slow} "
           f"(n=13 took {rs[13][1]:.2f}s)")


def test_2_normal_counts():
    rs = reports()
    bad = [n for n in range(14) if rs[n][0].normal_count != COUNTS[n][1]]
    got = ",".join(str(rs[n][0].normal_count) for n in range(14))
    report(2, not bad, f"normal counts n=0..13 [{got}] mismatches={bad}")


def test_3_representative_lists():
    rs = reports()
    bad = [n for n in range(1, 14) if list(rs[n][0].codes) != REPS[n]]
    total = sum(len(REPS[n]) for n in range(1, 14))
    report(3, not bad, f"{total} representatives n=1..13 equal in content and order, mismatches={bad}")


def naf_by_summation(signs):
    L = len(signs)
    return tuple(sum(signs[j] * signs[j + i] for j in range(L - i)) for i in range(L))


def test_4_naf_rows():
    bad, flagged = [], 0
    for row in fixtures.naf_rows():
        qd = decode(parse_code(row.code, row.n))
        got = tuple(naf_by_summation(x.signs) for x in qd)
        flagged += row.recomputed
        if got != row.nafs:
            bad.append((row.n, row.code))
    n_rows = len(fixtures.naf_rows())
    report(4, not bad, f"{n_rows} table rows (n<=8) match, {flagged} typo row (both printed lines) checked against "
                       f"recomputed values, mismatches={bad}")


def test_5_group():
    details = []
    ok = True
    for parity in (0, 1):
        G = group(parity)
        els = all_elements(parity)
        ok &= len(set(els)) == 4096
        C = G.cayley_table.astype(np.int64)
        closed = bool((C >= 0).all() and (C < ORDER).all())
        R = G.right_table.astype(np.int64)
        assoc = all(bool((R[C, j] == C[:, R[:, j]]).all()) for j in range(12))
        rng = random.Random(parity)
        ns = [n for n in range(4, 10) if n % 2 == parity]
        pool = [m for n in ns for m in random_members(n, 30, seed=17)]
        hom = all(apply(mul(g, h), s) == apply(g, apply(h, s))
                  for g, h, s in ((G.element(rng.randrange(ORDER)), G.element(rng.randrange(ORDER)),
                                   rng.choice(pool)) for _ in range(1000)))
        ok &= closed and assoc and hom
        details.append(f"parity {parity}: order={len(set(els))} closed={closed} assoc={assoc} hom={hom}")
    report(5, ok, "; ".join(details))


def _orbits_by_generators(members):
    index = {m: k for k, m in enumerate(members)}
    parent = list(range(len(members)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m, k in index.items():
        for j in range(12):
            a, b = find(k), find(index[_act_generator(j, m)])
            parent[a] = b
    out = {}
    for m, k in index.items():
        out.setdefault(find(k), []).append(m)
    return list(out.values())


def test_6_uniqueness():
    violations = 0
    orbits_seen = 0
    for n in range(0, 6):
        for orb in _orbits_by_generators(brute_force_bs(n)):
            orbits_seen += 1
            violations += sum(is_canonical(encode(m)) for m in orb) != 1
    sampled = 0
    for n in range(6, 11):
        for qd in random_members(n, 500, seed=n):
            sampled += 1
            try:
                canonical_oracle(qd)     # raises unless exactly one canonical image
            except Exception:
                violations += 1
    report(6, violations == 0, f"{orbits_seen} exhaustive orbits n<=5 and {sampled} sampled "
                               f"members n=6..10, violations={violations}")


def test_7_oracle_equivalence():
    bad = []
    for n in range(0, 6):
        brute = sorted({format_code(encode(canonical_oracle(qd))) for qd in brute_force_bs(n)})
        if brute != list(count_classes(n).codes):
            bad.append(n)
    report(7, not bad, f"brute force + oracle equals enumeration for n=0..5, mismatches={bad}")


def _cd(qd):
    return (naf_vector(qd.c) + naf_vector(qd.d)).values if qd.n else ()


def test_8_t4_law():
    checked, bad = 0, 0
    for n, codes in REPS.items():
        for c in codes:
            qd = decode(parse_code(c, n))
            checked += 1
            bad += _cd(t4_tau(qd)) != _cd(qd)
    rng = random.Random(8)
    for _ in range(1000):
        n = rng.randint(1, 10)
        qd = random_members(n, 1, seed=rng.randrange(10**6))[0]
        checked += 1
        bad += _cd(t4_tau(qd)) != _cd(qd)
    report(8, bad == 0, f"N_C+N_D preserved on {checked} quadruples, violations={bad}")


def test_9_norm_counterexample():
    p = SignPolynomial((1, 1, -1))
    q = SignPolynomial((1, -1, -1))
    u = composed_product([p, q])
    v = composed_product([p, q], [0, 1])
    ok = str(u) == "++---+--+" and str(v) == "++-++---+" and u == U and v == V
    ok &= same_norm(u, v) and not negrev_equivalent(u, v)
    rng = random.Random(9)
    masks_ok = True
    for _ in range(100):
        fs = [SignPolynomial([rng.choice((1, -1)) for _ in range(rng.randint(1, 4))]) for _ in range(3)]
        basic = naf_vector(composed_product(fs))
        for mask in np.ndindex(2, 2, 2):
            masks_ok &= naf_vector(composed_product(fs, list(mask))) == basic
    report(9, ok and masks_ok, f"U={u} V={v} same_norm={same_norm(u, v)} "
                               f"equivalent={negrev_equivalent(u, v)} 8-mask property={masks_ok}")


def test_10_determinism():
    base = [sys.executable, "-m", "baseq.cli", "enumerate", "13"]
    one = subprocess.run(base + ["--jobs", "1"], capture_output=True)
    eight = subprocess.run(base + ["--jobs", "8"], capture_output=True)
    ok = one.returncode == eight.returncode == 0 and one.stdout == eight.stdout
    report(10, ok, f"enumerate 13 --jobs 1 vs --jobs 8: {len(one.stdout)} bytes, identical={one.stdout == eight.stdout}")


if __name__ == "__main__":
    failed = 0
    for name, fn in [(k, v) for k, v in globals().items() if k.startswith("test_")]:
        try:
            fn()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
