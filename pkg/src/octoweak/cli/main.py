"""Command-line interface: verify, eval, table, spectrum.

Exit codes: 0 on success, 1 when any check FAILs (or FLAGs under
``--strict``), 2 for usage or expression errors.  The random seed for the
property checks comes from OCTOWEAK_SEED (default 0), so repeated runs
with the same configuration are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from gmpy2 import mpq

from ..field_theory import FieldParams, mass_matrix, spectrum
from ..fermion_symbolic import coupling_match
from ..octonion_core import render_table_text, table_records
from .checks import VerifyConfig, verify_all
from .evaluator import eval_source
from .expr import ExprError
from .report import FAIL, FLAG, render_json, render_markdown, summary_line


def _rat(text: str) -> mpq:
    """Accept integers, p/q fractions and decimal strings, exactly."""
    text = text.strip()
    try:
        if "." in text:
            whole, frac = text.split(".", 1)
            sign = -1 if whole.startswith("-") else 1
            whole = whole.lstrip("+-") or "0"
            if not frac.isdigit() or not whole.isdigit():
                raise ValueError(text)
            return sign * (mpq(int(whole)) + mpq(int(frac), 10 ** len(frac)))
        return mpq(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational: %r" % text)


def _coupling_args(sub, with_h: bool = True):
    sub.add_argument("--m", type=_rat, default=mpq(1))
    sub.add_argument("--f", type=_rat, default=mpq(1))
    sub.add_argument("--g", type=_rat, default=mpq(1))
    sub.add_argument("--g1", type=_rat, default=mpq(1))
    for k in (4, 5, 6, 7):
        sub.add_argument("--g%d" % k, type=_rat, default=mpq(1))
    if with_h:
        sub.add_argument("--h", type=_rat, default=mpq(1))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="octoweak",
        description="Exact split-octonion algebra and claim-by-claim "
                    "verification of its electroweak extension.")
    sub = ap.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every check and emit the report")
    v.add_argument("--json", metavar="PATH", help="write the JSON report here")
    v.add_argument("--markdown", metavar="PATH", help="write the markdown report here")
    v.add_argument("--strict", action="store_true",
                   help="treat FLAG (claim disagreement) as failure")
    _coupling_args(v)

    e = sub.add_parser("eval", help="evaluate one expression")
    e.add_argument("expr")
    e.add_argument("--format", choices=("text", "json"), default="text")

    t = sub.add_parser("table", help="print a multiplication or sign table")
    t.add_argument("--what", choices=("bao", "nonasalg", "sigma", "eps4"),
                   required=True)
    t.add_argument("--json", metavar="PATH", help="also write JSON records here")

    s = sub.add_parser("spectrum", help="mass matrix eigenvalues and claims")
    _coupling_args(s, with_h=False)
    return ap


def _cmd_verify(args) -> int:
    seed = int(os.environ.get("OCTOWEAK_SEED", "0"))
    cfg = VerifyConfig(m=args.m, f=args.f, g=args.g, g1=args.g1, g4=args.g4,
                       g5=args.g5, g6=args.g6, g7=args.g7, h=args.h,
                       seed=seed)
    results = verify_all(cfg)
    for r in sorted(results, key=lambda r: r.check_id):
        print("[%s] %s" % (r.status, r.check_id))
    print(summary_line(results))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(render_json(results))
    if args.markdown:
        with open(args.markdown, "w", encoding="utf-8") as fh:
            fh.write(render_markdown(results))
    bad = any(r.status == FAIL for r in results)
    if args.strict:
        bad = bad or any(r.status == FLAG for r in results)
    return 1 if bad else 0


def _cmd_eval(args) -> int:
    try:
        value = eval_source(args.expr)
    except ExprError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(value.json_data(), ensure_ascii=False))
    else:
        print(value.render())
    return 0


def _cmd_table(args) -> int:
    sys.stdout.write(render_table_text(args.what))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(table_records(args.what), fh, ensure_ascii=False, indent=2)
            fh.write("\n")
    return 0


def _cmd_spectrum(args) -> int:
    p = FieldParams(args.m, args.f)
    cs = coupling_match(args.g, args.g1, 0, args.g4, args.g5, args.g6, args.g7)
    m = mass_matrix(cs, p)
    res = spectrum(m)
    m2f = p.m * p.m / p.f
    claims = []
    for name, idx, gk in (("C", 4, args.g4), ("E", 7, args.g7)):
        claimed = gk * gk * m2f / 2
        computed = m[idx][idx]
        claims.append({"name": "%s mass coefficient" % name,
                       "claimed": str(claimed), "computed": str(computed),
                       "status": "PASS" if computed == claimed else "FLAG"})
    ga2 = args.g5 * args.g5 + args.g6 * args.g6
    if args.g5 != 0:
        computed_d = m[5][5] / (args.g5 * args.g5) * ga2
    elif args.g6 != 0:
        computed_d = m[6][6] / (args.g6 * args.g6) * ga2
    else:
        computed_d = mpq(0)
    claimed_d = ga2 * m2f
    claims.append({"name": "D mass coefficient", "claimed": str(claimed_d),
                   "computed": str(computed_d),
                   "status": "PASS" if computed_d == claimed_d else "FLAG"})
    out = {"eigenvalues": res.eigenvalues,
           "zero_modes": res.zero_modes(1e-12),
           "reconstruction_error": res.reconstruction_error,
           "claims": claims}
    print(json.dumps(out, ensure_ascii=False, indent=2))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "verify":
        return _cmd_verify(args)
    if args.command == "eval":
        return _cmd_eval(args)
    if args.command == "table":
        return _cmd_table(args)
    if args.command == "spectrum":
        return _cmd_spectrum(args)
    return 2


if __name__ == "__main__":
    raise SystemExit(main())
