"""Command-line interface.

Subcommands::

    reeskit gb     --vars x,y [--mod "..."] --ideal "..." [--order ...]
    reeskit rt     --vars ... --ideal ... [--modulo "..."] [--explain]
    reeskit rn     --vars ... --ideal ... --reduction "..."
    reeskit id     --vars ... --num <poly> --den <poly>
    reeskit ar     --vars ... --sub "..." --ideal ... [--modulo "..."]
    reeskit reg    --vars ... --ideal ... --reduction "..."
    reeskit dseq   --vars ... --seq "..."
    reeskit verify <name> --n <k> | --all
    reeskit list

Exit codes: 0 pass/resolved, 1 input error, 2 expectation failure,
3 unresolved search.
"""

from __future__ import annotations

import argparse
import sys

from .corpus import REGISTRY, emit_report, list_examples, run_example
from .ideals import Ideal
from .invariants import (artin_rees_number, d_sequence_check,
                         integral_degree_fraction, reduction_number, reg_rees)
from .poly import ORDERS, ParseError, PolyError, RingCtx
from .rees import rees_kernel, relation_type, relation_type_mod

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAIL = 2
EXIT_UNRESOLVED = 3


def _split_polys(text: str):
    seps = ";" if ";" in text else ","
    return [p.strip() for p in text.split(seps) if p.strip()]


def _build_ctx(args) -> RingCtx:
    if not args.vars:
        raise PolyError("--vars is required")
    order = ORDERS.get(args.order)
    if order is None:
        raise PolyError(f"unknown order {args.order!r}")
    ctx = RingCtx(args.vars, order)
    if getattr(args, "mod", None):
        ctx = ctx.with_quotient(_split_polys(args.mod))
    return ctx


def _parse_ideal(ctx, text: str) -> Ideal:
    return Ideal(ctx, _split_polys(text))


def _emit(pairs, status: str) -> None:
    print(emit_report(pairs, status))


def _outcome_exit(outcome) -> int:
    return EXIT_OK if outcome.resolved else EXIT_UNRESOLVED


def _cmd_gb(args) -> int:
    ctx = _build_ctx(args)
    I = _parse_ideal(ctx, args.ideal)
    for g in I.gb.elements:
        print(g)
    return EXIT_OK


def _cmd_rt(args) -> int:
    ctx = _build_ctx(args)
    I = _parse_ideal(ctx, args.ideal)
    pairs = []
    if args.modulo:
        J = _parse_ideal(ctx, args.modulo)
        value = relation_type_mod(I, J)
        pairs.append(("rt_mod", value))
    else:
        value = relation_type(I)
        pairs.append(("rt", value))
    if args.explain:
        pres = rees_kernel(I)
        for d in sorted(pres.profile):
            for g in pres.profile[d]:
                pairs.append((f"kernel.deg{d}", g))
    _emit(pairs, "pass")
    return EXIT_OK


def _cmd_rn(args) -> int:
    ctx = _build_ctx(args)
    I = _parse_ideal(ctx, args.ideal)
    J = _parse_ideal(ctx, args.reduction)
    outcome = reduction_number(I, J, args.cap)
    _emit([("rn", outcome)], "pass" if outcome.resolved else "unresolved")
    return _outcome_exit(outcome)


def _cmd_id(args) -> int:
    ctx = _build_ctx(args)
    num = ctx.parse(args.num)
    den = ctx.parse(args.den)
    outcome = integral_degree_fraction(num, den, ctx, args.cap)
    _emit([("id", outcome)], "pass" if outcome.resolved else "unresolved")
    return _outcome_exit(outcome)


def _cmd_ar(args) -> int:
    ctx = _build_ctx(args)
    a = _parse_ideal(ctx, args.sub)
    I = _parse_ideal(ctx, args.ideal)
    J = _parse_ideal(ctx, args.modulo) if args.modulo else Ideal(ctx, [ctx.zero])
    report = artin_rees_number(a, I, J, args.cap)
    pairs = [("s", report.s_value),
             ("rt_bound", report.rt_bound if report.rt_bound is not None
              else "unavailable"),
             ("exact", report.exact),
             ("window", report.window)]
    _emit(pairs, "pass" if report.s_value.resolved else "unresolved")
    return _outcome_exit(report.s_value)


def _cmd_reg(args) -> int:
    ctx = _build_ctx(args)
    I = _parse_ideal(ctx, args.ideal)
    J = _parse_ideal(ctx, args.reduction)
    outcome = reg_rees(I, J, args.cap)
    pairs = [("reg", outcome)]
    if outcome.witness:
        pairs.append(("mode", outcome.witness))
    _emit(pairs, "pass" if outcome.resolved else "unresolved")
    return _outcome_exit(outcome)


def _cmd_dseq(args) -> int:
    ctx = _build_ctx(args)
    seq = [ctx.parse(p) for p in _split_polys(args.seq)]
    ok = d_sequence_check(seq, ctx)
    _emit([("d_sequence", ok)], "pass")
    return EXIT_OK


def _cmd_list(args) -> int:
    print(list_examples())
    return EXIT_OK


def _run_one(name: str, n: int, cap: int) -> int:
    report = run_example(name, n, cap)
    print(emit_report(report.lines(), report.status))
    for line in report.failure_lines():
        print(line)
    if report.status == "fail":
        return EXIT_FAIL
    if report.status == "unresolved":
        return EXIT_UNRESOLVED
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.all:
        worst = EXIT_OK
        for name in sorted(REGISTRY):
            entry = REGISTRY[name]
            for n in range(entry.n_min, entry.n_max + 1):
                code = _run_one(name, n, args.cap)
                worst = max(worst, code)
                print()
        return worst
    if not args.name:
        raise PolyError("verify needs an example name or --all")
    if args.n is None:
        raise PolyError("verify needs --n <k>")
    return _run_one(args.name, args.n, args.cap)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reeskit",
        description="Ideal-theoretic invariants over exact rationals")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ideal=True):
        p.add_argument("--vars", help="comma-separated variable names")
        p.add_argument("--mod", help="quotient generators, ';'-separated")
        p.add_argument("--order", default="degrevlex",
                       choices=sorted(ORDERS))
        p.add_argument("--cap", type=int, default=32)
        if ideal:
            p.add_argument("--ideal", required=True,
                           help="ideal generators, ','-separated")

    p = sub.add_parser("gb", help="reduced Groebner basis")
    common(p)
    p.set_defaults(func=_cmd_gb)

    p = sub.add_parser("rt", help="relation type (optionally modulo an ideal)")
    common(p)
    p.add_argument("--modulo", help="ideal J for rt_J")
    p.add_argument("--explain", action="store_true",
                   help="dump the kernel degree profile")
    p.set_defaults(func=_cmd_rt)

    p = sub.add_parser("rn", help="reduction number rn_J(I)")
    common(p)
    p.add_argument("--reduction", required=True, help="generators of J")
    p.set_defaults(func=_cmd_rn)

    p = sub.add_parser("id", help="integral degree of a fraction num/den")
    common(p, ideal=False)
    p.add_argument("--num", required=True)
    p.add_argument("--den", required=True)
    p.set_defaults(func=_cmd_id)

    p = sub.add_parser("ar", help="Artin-Rees number s_J(a, A; I)")
    common(p)
    p.add_argument("--sub", required=True, help="generators of the ideal a")
    p.add_argument("--modulo", help="ideal J (default zero)")
    p.set_defaults(func=_cmd_ar)

    p = sub.add_parser("reg", help="regularity of the Rees module")
    common(p)
    p.add_argument("--reduction", required=True, help="generators of J")
    p.set_defaults(func=_cmd_reg)

    p = sub.add_parser("dseq", help="d-sequence check")
    common(p, ideal=False)
    p.add_argument("--seq", required=True, help="the sequence, ','-separated")
    p.set_defaults(func=_cmd_dseq)

    p = sub.add_parser("verify", help="run a registered example")
    p.add_argument("name", nargs="?")
    p.add_argument("--n", type=int)
    p.add_argument("--all", action="store_true")
    p.add_argument("--cap", type=int, default=32)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("list", help="list registered examples")
    p.set_defaults(func=_cmd_list)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError,) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (PolyError, ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
