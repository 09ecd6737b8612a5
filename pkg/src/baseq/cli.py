"""Command line entry point: ``baseq <command> ...``.

Exit codes: 0 ok, 1 usage or bad input, 2 mismatch against the reference
tables, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys

from . import fixtures
from .canonical import CanonicalFormError, canonical_code, canonical_oracle
from .enumeration import MAX_N, count_classes
from .group import orbit
from .normeq import U, V, negrev_equivalent, same_norm, same_norm_pairs
from .quadcodec import CodeError, QuadSumError, decode, encode, format_code, parse_code
from .seqcore import BaseQuadruple, is_base_sequences, naf_vector

OK, USAGE, MISMATCH, INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


class UsageError(Exception):
    pass


def _n(args) -> int:
    n = args.n if args.n is not None else getattr(args, "n_pos", None)
    if n is None:
        raise UsageError("n is required (--n)")
    if n < 0:
        raise UsageError("n must be non-negative")
    return n


def _member(code_text: str, n: int) -> BaseQuadruple:
    qd = decode(parse_code(code_text, n))
    if not is_base_sequences(qd):
        raise UsageError(f"{code_text} does not decode to base sequences BS({n + 1},{n})")
    return qd


def cmd_enumerate(args, out) -> int:
    n = _n(args)
    if n > MAX_N and not args.unbounded:
        raise UsageError(f"n > {MAX_N} needs --unbounded")
    report = count_classes(n, jobs=args.jobs, verify=args.verify)
    out.write(report.format(args.format))
    print(report.summary(), file=sys.stderr)
    return OK


def cmd_canonicalize(args, out) -> int:
    n = _n(args)
    qd = _member(args.code, n)
    if args.oracle:
        print(format_code(encode(canonical_oracle(qd))), file=out)
    else:
        print(format_code(canonical_code(qd)), file=out)
    return OK


def cmd_orbit(args, out) -> int:
    n = _n(args)
    members = orbit(_member(args.code, n))
    print(f"size={len(members)}", file=out)
    if args.members:
        for code in sorted(format_code(encode(m)) for m in members):
            print(code, file=out)
    return OK


def cmd_decode(args, out) -> int:
    qd = decode(parse_code(args.code, _n(args)))
    for x in qd:
        print(str(x), file=out)
    return OK


def cmd_encode(args, out) -> int:
    qd = BaseQuadruple.parse(args.a, args.b, args.c, args.d)
    print(format_code(encode(qd)), file=out)
    return OK


def _diff(label, want, got, out) -> bool:
    if want == got:
        print(f"PASS {label}", file=out)
        return True
    print(f"FAIL {label}", file=out)
    if isinstance(want, list):
        for c in sorted(set(want) - set(got)):
            print(f"  missing {c}", file=out)
        for c in sorted(set(got) - set(want)):
            print(f"  extra   {c}", file=out)
        if set(want) == set(got):
            print("  same codes, different order", file=out)
    else:
        print(f"  expected {want}, got {got}", file=out)
    return False


def cmd_verify_tables(args, out) -> int:
    max_n = args.max_n
    counts = fixtures.class_counts()
    reps = fixtures.representatives()
    ok = True
    for row in fixtures.naf_rows():
        if row.n > max_n:
            continue
        qd = decode(parse_code(row.code, row.n))
        got = tuple(tuple(naf_vector(x).values) if x.length else () for x in qd)
        tag = " (recomputed row)" if row.recomputed else ""
        ok &= _diff(f"naf n={row.n} {row.code}{tag}", row.nafs, got, out)
    for n in range(0, max_n + 1):
        report = count_classes(n, jobs=args.jobs)
        if n in counts:
            ok &= _diff(f"counts n={n}", counts[n], (report.class_count, report.normal_count), out)
        if n in reps:
            ok &= _diff(f"codes n={n}", reps[n], list(report.codes), out)
    return OK if ok else MISMATCH


def cmd_normeq(args, out) -> int:
    print(f"U = {U}", file=out)
    print(f"V = {V}", file=out)
    print(f"N_U = {','.join(map(str, naf_vector(U).values))}", file=out)
    print(f"same norm: {same_norm(U, V)}", file=out)
    print(f"negation/reversal equivalent: {negrev_equivalent(U, V)}", file=out)
    if args.scan:
        for L in range(1, args.scan + 1):
            for g in same_norm_pairs(L):
                print(f"L={L} " + " ".join(map(str, g)), file=out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="baseq", description="Base sequences BS(n+1,n): codes, symmetries, enumeration.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list canonical class representatives for n")
    e.add_argument("n_pos", metavar="n", type=int, nargs="?")
    e.add_argument("--n", type=int)
    e.add_argument("--format", choices=("text", "csv", "json"), default="text")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--unbounded", action="store_true", help=f"allow n > {MAX_N}")
    e.add_argument("--verify", action="store_true", help="re-check each representative")
    e.set_defaults(func=cmd_enumerate)

    for name, func, text in (("canonicalize", cmd_canonicalize, "canonical code of the class of CODE"),
                             ("orbit", cmd_orbit, "size of the class of CODE"),
                             ("decode", cmd_decode, "print A, B, C, D of CODE")):
        s = sub.add_parser(name, help=text)
        s.add_argument("code")
        s.add_argument("--n", type=int)
        s.set_defaults(func=func)
        if name == "canonicalize":
            s.add_argument("--oracle", action="store_true", help="use the full 4096-element sweep")
        if name == "orbit":
            s.add_argument("--members", action="store_true", help="also list member codes")

    s = sub.add_parser("encode", help="code of the quadruple A B C D given as +/- strings")
    for x in "abcd":
        s.add_argument(x)
    s.set_defaults(func=cmd_encode)

    s = sub.add_parser("verify-tables", help="recompute and diff against the reference tables")
    s.add_argument("max_n", type=int, nargs="?", default=8)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify_tables)

    s = sub.add_parser("normeq", help="equal-norm sequences not related by negation/reversal")
    s.add_argument("--scan", type=int, default=0, metavar="L", help="search lengths 1..L")
    s.set_defaults(func=cmd_normeq)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, CodeError, QuadSumError, ValueError) as exc:
        print(f"baseq: error: {exc}", file=sys.stderr)
        return USAGE
    except (CanonicalFormError, AssertionError) as exc:
        print(f"baseq: invariant violation: {exc}", file=sys.stderr)
        return INVARIANT
    except OSError as exc:
        print(f"baseq: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
