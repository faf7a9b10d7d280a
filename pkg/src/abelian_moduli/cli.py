"""``abelmod`` command-line interface.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import List, Optional

from . import chern, dimensions, lefschetz, siegel, verify
from ._util import parse_prime_range, require_prime
from .divisors import load_table_file
from .dsl import parse_divisor_expr
from .errors import DegreeError, DomainError, ParseError, TableError
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

USER_ERRORS = (ParseError, DegreeError, TableError, DomainError, KeyError, OSError)


# t1..t7 in the order the contributions are usually listed
TRACE_ALIASES = {f"t{i}": case for i, case in enumerate(lefschetz.CASE_IDS, start=1)}


class UsageError(Exception):
    pass


def _load_form(args):
    return load_table_file(args.table)


def cmd_intersect(args) -> Report:
    form = _load_form(args)
    value = parse_divisor_expr(args.expr).evaluate(form)
    result = {"poly": value}
    if args.prime is not None:
        result["value"] = value(require_prime(args.prime))
    return Report("intersect", {"expr": args.expr, "prime": args.prime, "table": form.source}, result)


def cmd_verify(args) -> Report:
    form = _load_form(args)
    primes = parse_prime_range(args.prime_range) if args.prime_range else list(verify.DEFAULT_PRIMES)
    checks = verify.run_suite(args.suite, form, primes, args.printed_comparison)
    result = {"total": len(checks), "failed": sum(not c.passed for c in checks)}
    query = {"suite": args.suite, "primes": primes, "printed_comparison": args.printed_comparison}
    return Report("verify", query, result, checks)


def cmd_dim(args) -> Report:
    fn = dimensions.dim_cusp_gamma1p if args.group == "gamma1p" else dimensions.dim_cusp_gamma2
    value = fn(args.prime, args.weight)
    return Report("dim", {"group": args.group, "prime": args.prime, "weight": args.weight}, {"dim": value})


def cmd_chern(args) -> Report:
    numbers = chern.chern_numbers(_load_form(args))
    if args.prime is None or args.symbolic:
        result = dict(numbers)
        if args.prime is not None:
            result["values"] = {k: v(require_prime(args.prime)) for k, v in numbers.items()}
    else:
        p_val = require_prime(args.prime)
        result = {k: v(p_val) for k, v in numbers.items()}
    return Report("chern", {"prime": args.prime, "symbolic": args.symbolic}, result)


def cmd_trace(args) -> Report:
    case = TRACE_ALIASES.get(args.case, args.case)
    cases = lefschetz.CASE_IDS if case == "all" else (lefschetz.fixed_set(case).case_id,)
    p_val = require_prime(args.prime) if args.prime is not None else None
    traces = lefschetz.all_traces()
    rows = []
    for cid in cases:
        row = traces[cid].as_dict(cid, normalized=args.normalized and p_val is None)
        if p_val is not None:
            k2, k1 = traces[cid].evaluate(p_val)
            row.update(k2=k2, k1=k1)
        rows.append(row)
    if case == "all":
        total = lefschetz.total_trace_sum()
        if p_val is not None:
            k2, k1 = total.evaluate(p_val)
            rows.append({"case": "total", "k2": k2, "k1": k1})
        else:
            rows.append(total.as_dict("total", normalized=args.normalized))
    query = {"case": args.case, "prime": args.prime, "normalized": args.normalized}
    return Report("trace", query, {"traces": rows})


def _parse_tau(text: str) -> siegel.SiegelPoint:
    try:
        parts = [float(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"--tau must be six comma-separated numbers, got {text!r}") from None
    if len(parts) != 6:
        raise UsageError(f"--tau must be six comma-separated numbers, got {len(parts)}")
    t1, t2, t3 = (complex(parts[i], parts[i + 1]) for i in (0, 2, 4))
    return siegel.SiegelPoint.from_entries(t1, t2, t3)


def _parse_char(text: str):
    try:
        top, bottom = text.split(";")
        m = [int(x) for x in top.split(",")] + [int(x) for x in bottom.split(",")]
    except ValueError:
        raise UsageError(f"--char must look like 'a,b;c,d', got {text!r}") from None
    return m


def cmd_theta(args) -> Report:
    if args.theta_cmd == "eval":
        tau = _parse_tau(args.tau)
        m = _parse_char(args.char)
        value = siegel.theta_constant(m, tau, args.eps)
        result = {"re": value.real, "im": value.imag, "abs": abs(value), "even": siegel.is_even(tuple(m))}
        return Report("theta eval", {"tau": args.tau, "char": args.char, "eps": args.eps}, result)
    check = verify.theta_check(args.test, args.samples, args.tol, args.seed, args.eps)
    query = {"test": args.test, "samples": args.samples, "tol": check.details["tol"], "seed": args.seed}
    return Report("theta check", query, {"max_residual": check.details["max_residual"]}, [check])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--table", help="intersection table file (default: shipped table or $MODULI_TABLE_PATH)")

    parser = argparse.ArgumentParser(
        prog="abelmod",
        description="Exact intersection theory and dimension formulas for moduli of (1,p)-polarized abelian surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("intersect", parents=[common], help="evaluate a degree-3 divisor expression")
    p.add_argument("--expr", required=True)
    p.add_argument("--prime", type=int)
    p.set_defaults(func=cmd_intersect)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=(*verify.SUITES, "all"), default="all")
    p.add_argument("--identity", dest="suite", choices=(*verify.SUITES, "all"), help=argparse.SUPPRESS)
    p.add_argument("--prime-range", help="e.g. 5..37")
    p.add_argument(
        "--use-paper-display",
        dest="printed_comparison",
        action="store_true",
        help="use the printed comparison polynomial in the k^1 check",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dim", parents=[common], help="dimension of a space of cusp forms")
    p.add_argument("--group", choices=("gamma1p", "gamma2sq"), required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--weight", type=int, required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("chern", parents=[common], help="Chern numbers and related invariants")
    p.add_argument("--prime", type=int)
    p.add_argument("--symbolic", action="store_true")
    p.set_defaults(func=cmd_chern)

    p = sub.add_parser("trace", parents=[common], help="holomorphic Lefschetz contributions")
    p.add_argument("--case", default="all", help=f"one of {', '.join(lefschetz.CASE_IDS)} or all")
    p.add_argument("--prime", type=int)
    p.add_argument("--normalized", action="store_true", help="brackets in units of (p^2-1)^2/34560")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("theta", help="genus-2 theta constants")
    tsub = p.add_subparsers(dest="theta_cmd", required=True)
    q = tsub.add_parser("eval", parents=[common])
    q.add_argument("--tau", required=True, help="t1r,t1i,t2r,t2i,t3r,t3i")
    q.add_argument("--char", required=True, help="a,b;c,d")
    q.add_argument("--eps", type=float, default=1e-14)
    q = tsub.add_parser("check", parents=[common])
    q.add_argument("--test", choices=("modularity", "vanishing", "omega", "odd"), required=True)
    q.add_argument("--samples", type=int, default=20)
    q.add_argument("--tol", type=float)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--eps", type=float, default=1e-14)
    p.set_defaults(func=cmd_theta)
    return parser


def _render_text(report: Report) -> str:
    res = report.result
    if report.command == "intersect":
        return str(res.get("value", res["poly"]))
    if report.command == "dim":
        return str(res["dim"])
    if report.command == "trace":
        return "\n".join(f"{r['case']}: k^2 {r['k2']}; k^1 {r['k1']}" for r in res["traces"])
    return report.to_text()


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except (UsageError, *USER_ERRORS) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"abelmod: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        # e.g. a what-if table for which the trace identity has no solution
        print(f"abelmod: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    report.elapsed_s = round(time.perf_counter() - start, 6)
    out = report.to_json() if args.format == "json" else _render_text(report)
    sys.stdout.write(out + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
