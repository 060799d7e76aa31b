"""``qpl`` command line.

Exit codes: 0 pass/holds, 1 legitimate negative, 2 input error, 3 resource bound.
"""
from __future__ import annotations

import argparse
import sys
from contextlib import nullcontext
from pathlib import Path

from . import enumeration as en
from .core import LEFT, MIDDLE, RIGHT, associates, loop_profile, nucleus
from .holomorph import automorphism_group, build_holomorph
from .identities import (BUILTINS, KHALIL, EvansWitness, IdentityError, builtin,
                         evans_check, identity_holds, is_balanced, parse_identity)
from .isotopy import BoundExceeded, find_isomorphism, find_isotopism
from .parastrophe import Kind, parse_kind, parastrophe, parastrophe_loop_profile
from .suites import SUITES, Summary, run_suite, workers_from_env
from .tablefile import TableFileError, format_perm, format_table, parse_perms, read_table

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path):
    try:
        return read_table(path)
    except TableFileError as exc:
        raise InputError(f"{path}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _fmt_set(s) -> str:
    return " ".join(map(str, sorted(s))) or "-"


# -- qpl table ------------------------------------------------------------------

def cmd_table(args, out) -> int:
    Q = _load(args.file)
    sub = args.table_cmd
    if sub == "validate":
        prof = loop_profile(Q)
        words = ["ok", f"order {Q.n}", "loop" if prof.is_loop else "quasigroup"]
        if associates(Q):
            words.append("group")
        out.write(", ".join(words) + "\n")
    elif sub == "parastrophe":
        out.write(format_table(parastrophe(Q, args.kind)))
    elif sub == "holomorph":
        out.write(format_table(build_holomorph(Q, bound=args.bound)))
    elif sub == "automorphisms":
        aut = automorphism_group(Q)
        out.write(f"# {len(aut)} automorphisms\n")
        for p in aut:
            out.write(format_perm(p) + "\n")
    elif sub == "nuclei":
        for kind in (LEFT, MIDDLE, RIGHT):
            out.write(f"{kind}: {_fmt_set(nucleus(Q, kind))}\n")
    elif sub == "profile":
        prof = loop_profile(Q)
        e = prof.two_sided_identity
        out.write(f"order: {Q.n}\n")
        out.write(f"identity: {'-' if e is None else e}\n")
        out.write(f"left identities: {_fmt_set(prof.left_identities)}\n")
        out.write(f"right identities: {_fmt_set(prof.right_identities)}\n")
        out.write(f"commutative: {str(prof.commutative).lower()}\n")
        out.write(f"associative: {str(associates(Q)).lower()}\n")
        out.write(f"exponent two: {str(prof.exponent_two).lower()}\n")
        rem = parastrophe_loop_profile(Q)
        for k in Kind:
            out.write(f"{k.label}: loop={str(rem.loops[k]).lower()} "
                      f"left-id={_fmt_set(rem.left_identity[k])} "
                      f"right-id={_fmt_set(rem.right_identity[k])}\n")
    return EXIT_OK


# -- qpl check ------------------------------------------------------------------

def cmd_check(args, out) -> int:
    sub = args.check_cmd
    if sub == "identity":
        Q = _load(args.file)
        try:
            ident = builtin(args.name) if args.name else parse_identity(args.expr)
        except IdentityError as exc:
            raise InputError(str(exc)) from None
        fail = identity_holds(Q, ident)
        out.write(f"identity: {ident}\n")
        out.write(f"balanced: {'yes' if is_balanced(ident) else 'no'}\n")
        if fail is None:
            out.write("holds\n")
            return EXIT_OK
        out.write("fails at " + " ".join(f"{k}={v}" for k, v in fail.items()) + "\n")
        return EXIT_NEGATIVE
    if sub in ("isotopic", "isomorphic"):
        Q1, Q2 = _load(args.a), _load(args.b)
        if Q1.n != Q2.n:
            out.write(f"not {sub} (orders differ)\n")
            return EXIT_NEGATIVE
        if sub == "isotopic":
            T = find_isotopism(Q1, Q2, args.bound)
            if T is None:
                out.write("not isotopic\n")
                return EXIT_NEGATIVE
            out.write("isotopic\n")
            for name, p in zip("ABC", T):
                out.write(f"{name}: {format_perm(p)}\n")
            return EXIT_OK
        phi = find_isomorphism(Q1, Q2, args.bound)
        if phi is None:
            out.write("not isomorphic\n")
            return EXIT_NEGATIVE
        out.write(f"isomorphic\nphi: {format_perm(phi)}\n")
        return EXIT_OK
    if sub == "khalil":
        Q = _load(args.file)
        ok = True
        for name in KHALIL:
            fail = identity_holds(Q, builtin(name))
            ok &= fail is None
            verdict = "holds" if fail is None else "fails at " + " ".join(
                f"{k}={v}" for k, v in fail.items())
            out.write(f"{name}: {verdict}\n")
        return EXIT_OK if ok else EXIT_NEGATIVE
    if sub == "evans":
        Q = _load(args.file)
        try:
            perms = parse_perms(Path(args.witness).read_text())
        except (TableFileError, OSError) as exc:
            raise InputError(f"{args.witness}: {exc}") from None
        if len(perms) != 10 or any(len(p) != Q.n for p in perms):
            raise InputError(f"{args.witness}: need ten permutations of degree {Q.n}")
        holds = evans_check(Q, EvansWitness(tuple(perms[:5]), tuple(perms[5:])))
        out.write("holds\n" if holds else "fails\n")
        return EXIT_OK if holds else EXIT_NEGATIVE
    raise AssertionError(sub)


# -- qpl verify / enum ------------------------------------------------------------

def cmd_verify(args, out) -> int:
    workers = args.workers or workers_from_env()
    ctx = open(args.report, "w") if args.report else nullcontext()
    summary = None
    with ctx as report:
        for item in run_suite(args.suite, args.max_order, args.seed, args.sample,
                              args.triples, workers):
            line = item.to_json() + "\n"
            if isinstance(item, Summary):
                summary = item
            elif args.quiet:
                continue
            (report or out).write(line)
            if report and isinstance(item, Summary):
                out.write(line)
    if summary.exit_status and summary.first_failure:
        ff = summary.first_failure
        sys.stderr.write(f"first failure: {ff['instance']} {ff['claim']}\n")
    return summary.exit_status


def cmd_enum(args, out) -> int:
    spec = en.EnumerationSpec(args.order, args.kind, args.seed, args.limit)
    for i, q in enumerate(en.stream(spec)):
        if i:
            out.write("\n")
        out.write(format_table(q))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qpl", description="finite quasigroup toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    t = sub.add_parser("table", help="per-table operations")
    ts = t.add_subparsers(dest="table_cmd", required=True)
    for name in ("validate", "holomorph", "automorphisms", "nuclei", "profile"):
        p = ts.add_parser(name)
        p.add_argument("file")
        if name == "holomorph":
            p.add_argument("--bound", type=int, default=200)
    p = ts.add_parser("parastrophe")
    p.add_argument("--kind", required=True, type=_kind,
                   help="pi1..pi6 or id, star, rinv, linv, rinv-star, linv-star")
    p.add_argument("file")

    c = sub.add_parser("check", help="identities, isotopy, isomorphism")
    cs = c.add_subparsers(dest="check_cmd", required=True)
    p = cs.add_parser("identity")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--name", choices=sorted(BUILTINS))
    g.add_argument("--expr")
    p.add_argument("file")
    for name in ("isotopic", "isomorphic"):
        p = cs.add_parser(name)
        p.add_argument("a")
        p.add_argument("b")
        p.add_argument("--bound", type=int, default=6 if name == "isotopic" else 8)
    p = cs.add_parser("khalil")
    p.add_argument("file")
    p = cs.add_parser("evans")
    p.add_argument("--witness", required=True,
                   help="ten permutations, one per line: P1..P5 then Q1..Q5")
    p.add_argument("file")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-order", type=int)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--sample", type=int, default=0,
                   help="extra seeded random squares of order max-order + 1")
    v.add_argument("--triples", type=int, default=100,
                   help="sampled triples per loop and case (nucleus suite)")
    v.add_argument("--report", help="write records here instead of stdout")
    v.add_argument("--workers", type=int, help="default: QPL_WORKERS or 1")
    v.add_argument("--quiet", action="store_true", help="print only the summary")

    e = sub.add_parser("enum", help="stream tables")
    e.add_argument("--kind", choices=en.KINDS, default="all_latin")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--seed", type=int)
    e.add_argument("--limit", type=int)
    return ap


def _kind(s: str) -> Kind:
    try:
        return parse_kind(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    handler = {"table": cmd_table, "check": cmd_check,
               "verify": cmd_verify, "enum": cmd_enum}[args.cmd]
    try:
        return handler(args, out)
    except InputError as exc:
        sys.stderr.write(f"qpl: {exc}\n")
        return EXIT_INPUT
    except BoundExceeded as exc:
        sys.stderr.write(f"qpl: {exc}\n")
        return EXIT_BOUND
    except ValueError as exc:
        sys.stderr.write(f"qpl: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
