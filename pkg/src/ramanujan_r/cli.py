"""``ramanujan-r``: constants, point evaluation, bounds, roots, tables and the verify suite.

Exit status: 0 when everything requested succeeded / passed, 1 when a check
failed, 2 on a usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis, bounds, polygamma, ramanujan
from .constants import REGISTRY
from .errors import BracketError, ConvergenceError, DomainError, ParameterError
from .tables import FORMATS, WHATS, GridSpec, emit_table, fmt
from .verify import SECTIONS, VerifyConfig, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

EVAL_FUNCTIONS = ("R", "B", "f", "F1", "F2", "F3", "H", "H3")


class _Parser(argparse.ArgumentParser):
    # argparse already exits with 2 on usage errors; keep the message on stderr
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _cmd_constants(args) -> int:
    w = max(len(c.name) for c in REGISTRY)
    print(f"{'name':<{w}}  {'printed':>12}  {'computed':>24}  match")
    failed = 0
    for c in REGISTRY:
        v = c.compute()
        ok = abs(v - c.printed_value) <= c.tolerance * (1.0 + 1e-9)
        failed += not ok
        print(f"{c.name:<{w}}  {c.printed:>12}  {fmt(v):>24}  {'yes' if ok else 'NO'}")
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_eval(args) -> int:
    x, fn, method = args.x, args.fn, args.method
    err = None
    if fn == "R":
        r = ramanujan.R_eval(x, method)
        val, err, route = r.value, r.est_abs_err, r.method.value
    elif fn == "f":
        r = ramanujan.f_eval(x, method)
        val, err, route = r.value, r.est_abs_err, r.method.value
    elif fn == "B":
        val, route = polygamma.B_fn(x), "closed form"
    elif fn in ("F1", "F2", "F3"):
        val, route = analysis.F_eval(int(fn[1]), x), "via f"
    elif fn == "H":
        val, route = analysis.H_eval(x), "auto"
    else:
        val, route = analysis.H3_eval(x), "auto"
    out = {"fn": fn, "x": fmt(x), "value": fmt(val), "method": route}
    if err is not None:
        out["est_abs_err"] = fmt(err)
    print(json.dumps(out))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    R = ramanujan.R_eval(args.x).value
    print(f"x = {fmt(args.x)}  R(x) = {fmt(R)}")
    bad = 0
    for name, bp in bounds.all_bounds(args.x, args.n).items():
        ok = bool(bp.contains(R, 1e-12))
        bad += not ok
        print(f"  {name:<16} {fmt(bp.lower):>24} <= R <= {fmt(bp.upper):<24} gap {fmt(bp.gap)}{'' if ok else '  VIOLATED'}")
    return EXIT_FAIL if bad else EXIT_OK


def _cmd_roots(args) -> int:
    x0 = analysis.find_root("h9", analysis.X0_SEED)
    est = analysis.delta_estimate()
    x2 = analysis.find_x2()
    cr = analysis.crossings(est.delta)
    rows = [
        ("x0 (zero of h9)", x0.root),
        ("x1 (zero of H, argmax F1)", est.x1),
        ("delta = F1(x1)", est.delta),
        ("x2 (zero of H3, argmax F2)", x2.root),
        ("F2(x2)", analysis.F_eval(2, x2.root)),
        ("1 + max h8", 1.0 + analysis.h8_max()),
        ("x5 (argmax F5)", cr.x5),
        ("x6", cr.x6),
        ("x7", cr.x7),
        ("x8 (argmax F7)", cr.x8),
        ("x9", cr.x9),
        ("x10", cr.x10),
    ]
    for name, v in rows:
        print(f"{name:<28} {fmt(v)}")
    return EXIT_OK


def _cmd_table(args) -> int:
    grid = None
    if args.what != "constants":
        grid = GridSpec(args.start, args.stop, args.points)
    text = emit_table(args.what, grid, args.format, args.out, args.n)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = VerifyConfig(
        grid_size=args.grid,
        table_N=args.table_n,
        seed=args.seed,
        tol_constants=args.tol_constants,
        tol_grid=args.tol_grid,
        max_cm_order=args.max_cm_order,
        strict=args.strict,
    )
    progress = None if args.json else (lambda s: print(f"# {s}", file=sys.stderr))
    report = run_verify(cfg, progress)
    if args.json:
        print(json.dumps(report.to_dict(), indent=1))
    else:
        for c in report.checks:
            tag = "PASS" if c.passed else ("INFO" if c.informational else "FAIL")
            print(f"{tag} [{c.criterion}] {c.name}: expected {_s(c.expected)}, got {_s(c.actual)}")
        print()
        for k, ok in report.by_criterion().items():
            print(f"criterion {k} ({SECTIONS[k]}): {'pass' if ok else 'FAIL'}")
        cnt = report.counts
        print(f"{cnt['passed']} passed, {cnt['failed']} failed, {cnt['informational']} informational "
              f"in {report.runtime_ms / 1e3:.2f} s")
    return EXIT_OK if report.ok else EXIT_FAIL


def _s(v):
    return fmt(v) if isinstance(v, float) else str(v)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ramanujan-r", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("constants", help="published constants next to computed values")
    s.set_defaults(func=_cmd_constants)

    s = sub.add_parser("eval", help="evaluate one function at one point")
    s.add_argument("--fn", required=True, choices=EVAL_FUNCTIONS)
    s.add_argument("--x", required=True, type=float)
    s.add_argument("--method", default="auto", choices=("auto", "direct", "origin", "center"),
                   help="route for R and f (ignored for the others)")
    s.set_defaults(func=_cmd_eval)

    s = sub.add_parser("bounds", help="every bound on R at one point")
    s.add_argument("--x", required=True, type=float)
    s.add_argument("--n", type=int, default=2, help="order for the polynomial bounds (default 2)")
    s.set_defaults(func=_cmd_bounds)

    s = sub.add_parser("roots", help="x0, x1, delta, x2 and the F5/F7 crossings")
    s.set_defaults(func=_cmd_roots)

    s = sub.add_parser("table", help="write a CSV or JSON table")
    s.add_argument("--what", required=True, choices=WHATS)
    s.add_argument("--from", dest="start", type=float, default=0.01)
    s.add_argument("--to", dest="stop", type=float, default=0.5)
    s.add_argument("--points", type=int, default=50)
    s.add_argument("--format", default="csv", choices=FORMATS)
    s.add_argument("--out", default=None, help="output path (default: stdout)")
    s.add_argument("--n", type=int, default=2, help="polynomial bound order for --what bounds")
    s.set_defaults(func=_cmd_table)

    s = sub.add_parser("verify", help="run the full verification suite")
    s.add_argument("--grid", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--strict", action="store_true", help="count the conjecture probe as a check")
    s.add_argument("--table-n", type=int, default=60)
    s.add_argument("--tol-constants", type=float, default=None,
                   help="relative tolerance for published constants (default: last printed digit)")
    s.add_argument("--tol-grid", type=float, default=1e-12)
    s.add_argument("--max-cm-order", type=int, default=6)
    s.add_argument("--json", action="store_true", help="print the report as JSON")
    s.set_defaults(func=_cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, DomainError, BracketError) as exc:
        parser.print_usage(sys.stderr)
        print(f"ramanujan-r: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"ramanujan-r: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except OSError as exc:
        print(f"ramanujan-r: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
