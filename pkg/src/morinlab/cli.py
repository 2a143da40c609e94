"""Command-line surface: classify germs, emit forms, witnesses, reports.

Every subcommand writes one JSON report to standard output (validating
against ``report_schema.json``) and a one-line human summary to standard
error.  Exit codes: 0 = ran to a verdict (any verdict), 2 = input error,
3 = the truncation order is insufficient for the requested depth.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import report as rpt
from .classify import (MORIN, TRUNCATION_INSUFFICIENT, MorinResult,
                       equivalence_fuzz, morin_classify)
from .errors import MorinlabError, ParseError, TruncationError
from .forms import FormSpec, isotopy_form, normal_form
from .isotopy import apply_witness, d_invariant, isotopy_classify, isotopy_witness
from .parser import GermSource, germ_from_map, parse_framed_curve, parse_germ
from .ruling import rebase_to_striction, ruling_morin1_check

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_TRUNCATION = 3


def _summary(text: str, good: bool | None = None) -> None:
    if good is not None and sys.stderr.isatty() and not os.environ.get("NO_COLOR"):
        code = "32" if good else "31"
        text = f"\x1b[{code}m{text}\x1b[0m"
    print(text, file=sys.stderr)


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(report: dict) -> None:
    sys.stdout.write(rpt.dumps(report))


def _load_germ(args) -> tuple[GermSource, "object"]:
    src = parse_germ(_read(getattr(args, "infile")))
    order = src.order
    needed = args.rmax + 2
    if order < needed and getattr(args, "auto_order", False):
        order = needed
    f = src.to_map_at_order(order)
    return src, f


def _default_rmax(args) -> None:
    if args.rmax is None:
        src = parse_germ(_read(args.infile))
        args.rmax = max(1, src.order - 2)


def cmd_classify(args) -> int:
    _default_rmax(args)
    t0 = time.perf_counter()
    src, f = _load_germ(args)
    verdict = morin_classify(f, args.rmax)
    _emit(rpt.classify_report(src.to_text(), args.rmax, verdict,
                              time.perf_counter() - t0))
    _summary(f"verdict: {verdict.label()}", good=verdict.kind == MORIN)
    return EXIT_TRUNCATION if verdict.kind == TRUNCATION_INSUFFICIENT else EXIT_OK


def cmd_fuzz(args) -> int:
    _default_rmax(args)
    t0 = time.perf_counter()
    src, f = _load_germ(args)
    baseline = morin_classify(f, args.rmax)
    if baseline.kind == TRUNCATION_INSUFFICIENT:
        _emit(rpt.classify_report(src.to_text(), args.rmax, baseline,
                                  time.perf_counter() - t0))
        _summary(f"verdict: {baseline.label()}", good=False)
        return EXIT_TRUNCATION
    verdicts = equivalence_fuzz(f, args.trials, args.degree, args.seed, args.rmax)
    report = rpt.fuzz_report(src.to_text(), args.rmax, args.trials, args.degree,
                             args.seed, baseline, verdicts,
                             time.perf_counter() - t0)
    _emit(report)
    _summary(f"baseline {baseline.label()}; {args.trials} conjugates; "
             f"all_match={report['all_match']}", good=report["all_match"])
    return EXIT_OK


def _form_spec(args) -> FormSpec:
    return FormSpec(r=args.r, a=args.a, extra=args.extra,
                    eps1=getattr(args, "eps1", 1), eps2=getattr(args, "eps2", 1))


def cmd_normal_form(args) -> int:
    t0 = time.perf_counter()
    spec = _form_spec(args)
    f = normal_form(spec, order=args.order)
    _emit(rpt.form_report(spec, germ_from_map(f).to_text(),
                          time.perf_counter() - t0))
    _summary(f"normal form: r={spec.r} a={spec.a} extra={spec.extra} "
             f"(m={spec.m}, n={spec.n})")
    return EXIT_OK


def cmd_isotopy_form(args) -> int:
    t0 = time.perf_counter()
    spec = _form_spec(args)
    f = isotopy_form(spec, order=args.order)
    _emit(rpt.form_report(spec, germ_from_map(f).to_text(),
                          time.perf_counter() - t0))
    _summary(f"isotopy form: r={spec.r} a={spec.a} extra={spec.extra} "
             f"eps=({spec.eps1},{spec.eps2})")
    return EXIT_OK


def cmd_d_invariant(args) -> int:
    _default_rmax(args)
    t0 = time.perf_counter()
    src, f = _load_germ(args)
    verdict = morin_classify(f, args.rmax)
    if verdict.kind == TRUNCATION_INSUFFICIENT:
        _emit(rpt.classify_report(src.to_text(), args.rmax, verdict,
                                  time.perf_counter() - t0))
        _summary(f"verdict: {verdict.label()}", good=False)
        return EXIT_TRUNCATION
    if verdict.kind != MORIN:
        _summary(f"D undefined: germ is {verdict.label()}, not Morin", good=False)
        return EXIT_INPUT
    from .isotopy import GAUGE_NOTE
    d = d_invariant(f, verdict.r)
    _emit(rpt.d_invariant_report(src.to_text(), verdict.r, d, GAUGE_NOTE,
                                 time.perf_counter() - t0))
    _summary(f"Morin({verdict.r}); D = {d:+d}")
    return EXIT_OK


def cmd_table(args) -> int:
    t0 = time.perf_counter()
    cells = [isotopy_classify(r, a)
             for r in range(1, args.rmax + 1) for a in range(1, args.amax + 1)]
    _emit(rpt.table_report(args.rmax, args.amax, cells, time.perf_counter() - t0))
    _summary(f"isotopy class table for r <= {args.rmax}, a <= {args.amax}")
    return EXIT_OK


def cmd_witness(args) -> int:
    t0 = time.perf_counter()
    spec = _form_spec(args)
    w = isotopy_witness(spec)
    verified = apply_witness(isotopy_form(spec), w) == isotopy_form(w.representative)
    _emit(rpt.witness_report(w, verified, time.perf_counter() - t0))
    rep = w.representative
    _summary(f"reduced ({spec.eps1},{spec.eps2}) -> ({rep.eps1},{rep.eps2}); "
             f"verified={verified}", good=verified)
    return EXIT_OK


def cmd_ruling(args) -> int:
    t0 = time.perf_counter()
    src = parse_framed_curve(_read(args.infile))
    fc = src.to_framed_curve()
    _, st = rebase_to_striction(fc)
    chk = ruling_morin1_check(fc)
    _emit(rpt.ruling_report(src.to_text(), src.n, src.order, st, chk,
                            time.perf_counter() - t0))
    _summary(f"1-Morin: classifier={chk.morin1_by_classifier} "
             f"alpha={chk.morin1_by_alpha} agree={chk.agree} "
             f"identity={chk.identity_holds}", good=chk.agree)
    return EXIT_OK


def cmd_schema(args) -> int:
    import json

    sys.stdout.write(json.dumps(rpt.load_schema(), indent=2) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="morinlab",
        description="Exact classification of corank-one map-germs as Morin "
                    "singularities, with isotopy invariants and witnesses.")
    sub = top.add_subparsers(dest="command", required=True)

    def germ_flags(p, fuzz=False):
        p.add_argument("--in", dest="infile", required=True,
                       help="germ file: map <m> -> <n> order <d> : [exprs]")
        p.add_argument("--rmax", type=int, default=None,
                       help="maximal Morin depth to test (default: order - 2)")
        p.add_argument("--auto-order", action="store_true",
                       help="re-expand the polynomial input when --rmax "
                            "needs a higher truncation order")

    p = sub.add_parser("classify", help="classify a germ file")
    germ_flags(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fuzz", help="classify random conjugates of a germ")
    germ_flags(p)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree", type=int, default=3)
    p.set_defaults(func=cmd_fuzz)

    def form_flags(p, signs):
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--extra", type=int, default=0)
        p.add_argument("--order", type=int, default=None)
        if signs:
            p.add_argument("--eps1", type=int, choices=(1, -1), default=1)
            p.add_argument("--eps2", type=int, choices=(1, -1), default=1)

    p = sub.add_parser("normal-form", help="emit a Morin normal form germ")
    form_flags(p, signs=False)
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("isotopy-form", help="emit a two-sign isotopy representative")
    form_flags(p, signs=True)
    p.set_defaults(func=cmd_isotopy_form)

    p = sub.add_parser("d-invariant", help="compute the sign invariant D of a germ")
    germ_flags(p)
    p.set_defaults(func=cmd_d_invariant)

    p = sub.add_parser("table", help="isotopy class counts over a (r, a) range")
    p.add_argument("--rmax", type=int, default=8)
    p.add_argument("--amax", type=int, default=4)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("witness", help="rotation sequences reducing an isotopy form")
    form_flags(p, signs=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("ruling", help="striction and 1-Morin check of a framed curve")
    p.add_argument("--in", dest="infile", required=True,
                   help="framed-curve file: planes <n> order <d>, then "
                        "gamma:/delta1:..deltaN: rows")
    p.set_defaults(func=cmd_ruling)

    p = sub.add_parser("schema", help="print the JSON report schema")
    p.set_defaults(func=cmd_schema)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _summary(f"input error: {exc}", good=False)
        return EXIT_INPUT
    except TruncationError as exc:
        _summary(f"truncation insufficient: {exc}", good=False)
        return EXIT_TRUNCATION
    except (MorinlabError, OSError, ValueError) as exc:
        _summary(f"error: {exc}", good=False)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
