"""Command line front end.

Subcommands
    eval          one numeric evaluation (expq, lnq, dlnq, wq, dwq)
    branch-point  branch point location for a given q
    classify      exact arithmetic-nature verdict for a symbolic input
    table         (z, value) rows over an inclusive grid
    verify        run the numerical cross-check suites

Exit codes: 0 success, 1 domain error or failed check, 2 malformed input or
bad configuration (argparse errors land on 2 as well).

JSON output renders floats with 17 significant digits so values round-trip;
infinities appear as the strings "inf" / "-inf" since JSON has no literal
for them.  Plain output uses 10 significant digits.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Any

from .classify import (classify_expq, classify_lnq_derivative, classify_tower,
                       classify_wq)
from .errors import (ConfigurationError, LambertTsallisError, MalformedInputError)
from .exact import parse_exact, render_exact
from .qexp import dlnq_dz, exp_q, ln_q
from .verify import (run_all, run_branch_suite, run_derivative_suite,
                     run_eq5_suite, run_residual_suite, run_scan_suite)
from .wq import (DEFAULT_MAX_ITER, DEFAULT_TOL, Branch, branch_domain,
                 branch_point, dwq_dz, wq)

__all__ = ["main", "entry", "render_json"]


def _fmt_plain(v: float) -> str:
    return format(v, ".10g")


def render_json(doc: Any) -> str:
    """JSON with deterministic float formatting (17 significant digits,
    infinities as strings)."""
    if doc is None:
        return "null"
    if doc is True:
        return "true"
    if doc is False:
        return "false"
    if isinstance(doc, str):
        return json.dumps(doc)
    if isinstance(doc, int):
        return str(doc)
    if isinstance(doc, float):
        if math.isinf(doc):
            return '"inf"' if doc > 0 else '"-inf"'
        if math.isnan(doc):
            return '"nan"'
        return format(doc, ".17g")
    if isinstance(doc, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in doc) + "]"
    if isinstance(doc, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {render_json(v)}"
                               for k, v in doc.items()) + "}"
    raise TypeError(f"cannot render {type(doc).__name__} as JSON")


def _csv_line(row: list[Any]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(row)
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lambert-tsallis",
        description="Deformed exponentials, their Lambert-style inverse, and "
                    "exact arithmetic-nature classification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one quantity at a point")
    p_eval.add_argument("subject", choices=["expq", "lnq", "dlnq", "wq", "dwq"])
    p_eval.add_argument("--q", type=float, required=True)
    p_eval.add_argument("--z", type=float, required=True)
    p_eval.add_argument("--branch", choices=["upper", "lower"], default="upper")
    p_eval.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_eval.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p_eval.add_argument("--format", choices=["plain", "json", "csv"],
                        default="plain")

    p_bp = sub.add_parser("branch-point", help="branch point for a given q")
    p_bp.add_argument("--q", type=float, required=True)
    p_bp.add_argument("--format", choices=["plain", "json", "csv"],
                      default="plain")

    p_cls = sub.add_parser("classify",
                           help="exact verdict: rational, algebraic "
                                "irrational, transcendental, or unknown")
    p_cls.add_argument("subject", choices=["wq", "expq", "lnq-deriv", "tower"])
    p_cls.add_argument("--q", type=str, default=None,
                       help="exact number, e.g. 3/2, sqrt(2), 1+2*sqrt(3), pi")
    p_cls.add_argument("--z", type=str, default=None)
    p_cls.add_argument("--z0", type=str, default=None,
                       help="evaluation point for the lnq derivative")
    p_cls.add_argument("--r", type=str, default=None,
                       help="rational height of the infinite power tower")
    p_cls.add_argument("--format", choices=["plain", "json", "csv"],
                       default="plain")

    p_tab = sub.add_parser("table", help="(z, value) rows over a grid")
    p_tab.add_argument("subject", choices=["wq", "expq"])
    p_tab.add_argument("--q", type=float, required=True)
    p_tab.add_argument("--z-from", type=float, required=True, dest="z_from")
    p_tab.add_argument("--z-to", type=float, required=True, dest="z_to")
    p_tab.add_argument("--steps", type=int, required=True)
    p_tab.add_argument("--branch", choices=["upper", "lower"], default="upper")
    p_tab.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_tab.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    p_tab.add_argument("--format", choices=["csv", "json"], default="csv")

    p_ver = sub.add_parser("verify", help="run numerical cross-check suites")
    p_ver.add_argument("--suite",
                       choices=["residual", "derivative", "eq5", "branch",
                                "scan", "all"],
                       default="all")
    p_ver.add_argument("--degree-max", type=int, default=3)
    p_ver.add_argument("--coeff-max", type=int, default=30)
    p_ver.add_argument("--eps", type=float, default=1e-8)
    p_ver.add_argument("--format", choices=["plain", "json", "csv"],
                       default="plain")
    return parser


def _cmd_eval(args: argparse.Namespace) -> int:
    branch = Branch(args.branch)
    doc: dict[str, Any] = {"command": "eval", "subject": args.subject,
                           "q": args.q, "z": args.z}
    extra: list[str] = []
    if args.subject == "expq":
        value = exp_q(args.q, args.z)
    elif args.subject == "lnq":
        value = ln_q(args.q, args.z)
    elif args.subject == "dlnq":
        value = dlnq_dz(args.q, args.z)
    elif args.subject == "wq":
        res = wq(args.q, args.z, branch, args.tol, args.max_iter)
        value = res.w
        doc["branch"] = branch.value
        doc["residual"] = res.residual
        doc["iterations"] = res.iterations
        doc["meta"] = {"tol": args.tol, "max_iter": args.max_iter}
        extra.append(f"residual={_fmt_plain(res.residual)} "
                     f"iterations={res.iterations}")
    else:  # dwq
        value = dwq_dz(args.q, args.z, branch, args.tol, args.max_iter)
        doc["branch"] = branch.value
        doc["meta"] = {"tol": args.tol, "max_iter": args.max_iter}
    doc["value"] = value

    if args.format == "json":
        print(render_json(doc))
    elif args.format == "csv":
        if args.subject == "wq":
            print(_csv_line(["value", "residual", "iterations"]))
            print(_csv_line([format(value, ".17g"),
                             format(doc["residual"], ".17g"),
                             doc["iterations"]]))
        else:
            print(_csv_line(["value"]))
            print(_csv_line([format(value, ".17g")]))
    else:
        print(_fmt_plain(value))
        for line in extra:
            print(line)
    return 0


def _cmd_branch_point(args: argparse.Namespace) -> int:
    bp = branch_point(args.q)
    if args.format == "json":
        body = None if bp is None else {"z_b": bp.z_b, "w_b": bp.w_b}
        print(render_json({"command": "branch-point", "q": args.q,
                           "branch_point": body}))
    elif args.format == "csv":
        print(_csv_line(["z_b", "w_b"]))
        if bp is not None:
            print(_csv_line([format(bp.z_b, ".17g"), format(bp.w_b, ".17g")]))
    else:
        if bp is None:
            print(f"no branch point for q = {args.q:g} (exists only for q < 2)")
        else:
            print(f"z_b = {_fmt_plain(bp.z_b)}")
            print(f"w_b = {_fmt_plain(bp.w_b)}")
    return 0


def _require(args: argparse.Namespace, names: list[str]) -> dict[str, str]:
    got = {}
    for name in names:
        raw = getattr(args, name)
        if raw is None:
            raise ConfigurationError(
                f"classify {args.subject} requires --{name}")
        got[name] = raw
    return got


def _cmd_classify(args: argparse.Namespace) -> int:
    if args.subject == "wq":
        raw = _require(args, ["q", "z"])
        result = classify_wq(parse_exact(raw["q"]), parse_exact(raw["z"]))
    elif args.subject == "expq":
        raw = _require(args, ["q", "z"])
        result = classify_expq(parse_exact(raw["q"]), parse_exact(raw["z"]))
    elif args.subject == "lnq-deriv":
        raw = _require(args, ["q", "z0"])
        result = classify_lnq_derivative(parse_exact(raw["q"]),
                                         parse_exact(raw["z0"]))
    else:  # tower
        raw = _require(args, ["r"])
        result = classify_tower(parse_exact(raw["r"]))
    inputs = {name: render_exact(parse_exact(value))
              for name, value in raw.items()}
    record = result.to_record()

    if args.format == "json":
        print(render_json({"command": "classify", "subject": args.subject,
                           "inputs": inputs, **record}))
    elif args.format == "csv":
        print(_csv_line(["verdict", "rule", "exact_value", "justification"]))
        print(_csv_line([record["verdict"], record["rule"],
                         record["exact_value"] or "",
                         record["justification"]]))
    else:
        for name, value in inputs.items():
            print(f"{name} = {value}")
        print(f"verdict: {record['verdict']}")
        print(f"rule: {record['rule']}")
        if record["exact_value"] is not None:
            print(f"exact value: {record['exact_value']}")
        print(f"justification: {record['justification']}")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    if args.steps < 2:
        raise ConfigurationError(f"--steps must be >= 2, got {args.steps}")
    if not (args.z_from < args.z_to):
        raise ConfigurationError(
            f"--z-from must be less than --z-to, got {args.z_from} and {args.z_to}")
    step = (args.z_to - args.z_from) / (args.steps - 1)
    grid = [args.z_from + i * step for i in range(args.steps)]
    branch = Branch(args.branch)

    if args.subject == "wq":
        dom = branch_domain(args.q, branch)
        kept = [z for z in grid if dom.contains(z)]
        clipped = len(grid) - len(kept)
        if clipped:
            print(f"warning: {clipped} of {len(grid)} grid points fall outside "
                  f"the {branch.value} branch domain {dom} and were dropped",
                  file=sys.stderr)
        if not kept:
            print("error: no grid points inside the branch domain",
                  file=sys.stderr)
            return 1
        solved = [wq(args.q, z, branch, args.tol, args.max_iter) for z in kept]
        rows = [(z, r.w, r.residual) for z, r in zip(kept, solved)]
    else:
        clipped = 0
        rows = [(z, exp_q(args.q, z)) for z in grid]

    if args.format == "json":
        doc: dict[str, Any] = {"command": "table", "subject": args.subject,
                               "q": args.q, "branch": branch.value,
                               "clipped": clipped}
        if args.subject == "wq":
            doc["meta"] = {"tol": args.tol, "max_iter": args.max_iter}
            doc["rows"] = [{"z": z, "value": v, "residual": r}
                           for z, v, r in rows]
        else:
            doc["rows"] = [{"z": z, "value": v} for z, v in rows]
        print(render_json(doc))
    else:
        if args.subject == "wq":
            print(_csv_line(["z", "value", "residual"]))
            for z, v, r in rows:
                print(_csv_line([format(z, ".17g"), format(v, ".17g"),
                                 format(r, ".17g")]))
        else:
            print(_csv_line(["z", "value"]))
            for z, v in rows:
                print(_csv_line([format(z, ".17g"), format(v, ".17g")]))
    return 0


_SUITES = {
    "residual": run_residual_suite,
    "derivative": run_derivative_suite,
    "eq5": run_eq5_suite,
    "branch": run_branch_suite,
    "all": run_all,
}


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "scan":
        checks = run_scan_suite(args.degree_max, args.coeff_max, args.eps)
    else:
        checks = _SUITES[args.suite]()
    ok = all(c.passed for c in checks)

    if args.format == "json":
        print(render_json({"command": "verify", "suite": args.suite,
                           "passed": ok,
                           "checks": [{"name": c.name, "passed": c.passed,
                                       "measured": c.measured,
                                       "threshold": c.threshold}
                                      for c in checks]}))
    elif args.format == "csv":
        print(_csv_line(["name", "passed", "measured", "threshold"]))
        for c in checks:
            print(_csv_line([c.name, str(c.passed).lower(),
                             format(c.measured, ".17g"),
                             format(c.threshold, ".17g")]))
    else:
        for c in checks:
            mark = "PASS" if c.passed else "FAIL"
            print(f"{mark}  {c.name}: measured {c.measured:.3e} "
                  f"(threshold {c.threshold:.3e})")
        print(f"{'all checks passed' if ok else 'SOME CHECKS FAILED'} "
              f"({sum(c.passed for c in checks)}/{len(checks)})")
    return 0 if ok else 1


_DISPATCH = {
    "eval": _cmd_eval,
    "branch-point": _cmd_branch_point,
    "classify": _cmd_classify,
    "table": _cmd_table,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (MalformedInputError, ConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LambertTsallisError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
