"""Command-line front door: bounds, hulls, oracle runs, and verifications.

Reports are byte-stable: identical invocations produce identical output.
Rationals are always serialized as num/den pairs or "num/den" strings, never
floats.  Exit codes: 0 = success / property verified, 1 = a verification
command found a violation (the report names it), 2 = usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .bounds import submult_check, theta_lower, u_bound
from .fourier import dft, support
from .groups import format_group_spec, make_group, parse_group_spec, subgroup_of_order
from .search import (
    BudgetExceeded,
    SearchBudget,
    _is_prime,
    chebotarev_check,
    extremal_subgroup_function,
    tao_tight_construct,
    theta_oracle,
    witness_json_dict,
)

__all__ = ["run_cli", "main"]

BOUND_COLUMNS = ["n", "k", "d1", "d2", "u_num", "u_den", "ceil_u"]
SUBMULT_COLUMNS = [
    "n", "d", "s", "t", "a1", "a2", "b1", "b2", "c1", "c2",
    "case_id", "lhs_num", "lhs_den", "rhs_num", "rhs_den",
]


def _bound_row(n: int, k: int) -> dict:
    b = u_bound(n, k)
    return {
        "n": n,
        "k": k,
        "d1": b.pair.d1,
        "d2": b.pair.d2,
        "u_num": b.value.numerator,
        "u_den": b.value.denominator,
        "ceil_u": b.ceiling,
    }


def _cmd_bound(args, budget) -> tuple[int, dict]:
    rows = [_bound_row(args.n, args.k)]
    return 0, {"command": "bound", "columns": BOUND_COLUMNS, "rows": rows}


def _cmd_hull(args, budget) -> tuple[int, dict]:
    rows = [_bound_row(args.n, k) for k in range(1, args.n + 1)]
    report = {"command": "hull", "columns": BOUND_COLUMNS, "rows": rows}
    return 0, report


def _cmd_theta(args, budget) -> tuple[int, dict]:
    group = parse_group_spec(args.group_spec)
    w = theta_oracle(group, args.k, budget=budget)
    payload = witness_json_dict(w)
    row = {
        "group": payload["group"],
        "k": w.k,
        "theta": w.theta,
        "support_indices": ";".join(str(i) for i in payload["support_indices"]),
        "spectrum_support_indices": ";".join(
            str(i) for i in payload["spectrum_support_indices"]
        ),
    }
    columns = ["group", "k", "theta", "support_indices", "spectrum_support_indices"]
    return 0, {"command": "theta", "columns": columns, "rows": [row], "json": payload}


def _cmd_verify_tao(args, budget) -> tuple[int, dict]:
    p = args.p
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    rows = []
    bad = 0
    for k in range(1, p + 1):
        expected = p + 1 - k
        w = theta_oracle(make_group([p]), k, budget=budget)
        f = tao_tight_construct(p, k)
        cons_supp = len(support(f))
        cons_cosupp = len(support(dft(f)))
        ok = (
            w.theta == expected
            and cons_supp == k
            and cons_cosupp == expected
        )
        bad += 0 if ok else 1
        rows.append(
            {
                "p": p,
                "k": k,
                "theta": w.theta,
                "expected": expected,
                "construct_support": cons_supp,
                "construct_cosupport": cons_cosupp,
                "status": "ok" if ok else "violation",
            }
        )
    columns = ["p", "k", "theta", "expected", "construct_support", "construct_cosupport", "status"]
    return (1 if bad else 0), {"command": "verify-tao", "columns": columns, "rows": rows}


def _cmd_chebotarev(args, budget) -> tuple[int, dict]:
    cert = chebotarev_check(args.n, max_size=args.max_size)
    prime = _is_prime(args.n)
    if cert.first_singular is None:
        status = "certified" if prime else "diagnostic-clear"
        srows = scols = ""
    else:
        status = "violation" if prime else "diagnostic-singular"
        srows = ";".join(str(i) for i in cert.first_singular[0])
        scols = ";".join(str(i) for i in cert.first_singular[1])
    row = {
        "n": args.n,
        "prime": int(prime),
        "checked": cert.checked,
        "singular_rows": srows,
        "singular_cols": scols,
        "status": status,
    }
    columns = ["n", "prime", "checked", "singular_rows", "singular_cols", "status"]
    code = 1 if status == "violation" else 0
    return code, {"command": "chebotarev", "columns": columns, "rows": [row]}


def _cmd_submult(args, budget) -> tuple[int, dict]:
    rows = []
    for n in range(2, args.n_max + 1):
        for tr in submult_check(n):
            rows.append(
                {
                    "n": tr.n,
                    "d": tr.d,
                    "s": tr.s,
                    "t": tr.t,
                    "a1": tr.a1,
                    "a2": tr.a2,
                    "b1": tr.b1,
                    "b2": tr.b2,
                    "c1": tr.c1,
                    "c2": tr.c2,
                    "case_id": tr.case_id,
                    "lhs_num": tr.lhs.numerator,
                    "lhs_den": tr.lhs.denominator,
                    "rhs_num": tr.rhs.numerator,
                    "rhs_den": tr.rhs.denominator,
                }
            )
    report = {"command": "submult", "columns": SUBMULT_COLUMNS, "rows": rows}
    return (1 if rows else 0), report


def _cmd_extremal(args, budget) -> tuple[int, dict]:
    group = parse_group_spec(args.group_spec)
    sub = subgroup_of_order(group, args.d)
    chi = group.identity()
    f = extremal_subgroup_function(group, sub, chi)
    supp = support(f)
    cosupp = support(dft(f))
    product = len(supp) * len(cosupp)
    ok = product == group.order
    row = {
        "group": format_group_spec(group),
        "d": args.d,
        "support_size": len(supp),
        "spectrum_support_size": len(cosupp),
        "product": product,
        "n": group.order,
        "status": "ok" if ok else "violation",
    }
    columns = ["group", "d", "support_size", "spectrum_support_size", "product", "n", "status"]
    payload = {
        "group": row["group"],
        "d": args.d,
        "support_indices": list(supp),
        "spectrum_support_indices": list(cosupp),
        "values": [[str(c) for c in v.coefficients] for v in f.values],
    }
    return (0 if ok else 1), {
        "command": "extremal",
        "columns": columns,
        "rows": [row],
        "json": payload,
    }


def _cmd_verify_main(args, budget) -> tuple[int, dict]:
    group = parse_group_spec(args.group_spec)
    n = group.order
    rows = []
    bad = 0
    for k in range(1, n + 1):
        w = theta_oracle(group, k, budget=budget)
        b = u_bound(n, k)
        if w.theta < b.ceiling:
            status = "violation"
            bad += 1
        elif w.theta == b.ceiling:
            status = "tight"
        else:
            status = "slack"
        rows.append(
            {
                "group": format_group_spec(group),
                "k": k,
                "theta": w.theta,
                "u_num": b.value.numerator,
                "u_den": b.value.denominator,
                "ceil_u": b.ceiling,
                "status": status,
            }
        )
    columns = ["group", "k", "theta", "u_num", "u_den", "ceil_u", "status"]
    return (1 if bad else 0), {"command": "verify-main", "columns": columns, "rows": rows}


_COMMANDS = {
    "bound": _cmd_bound,
    "hull": _cmd_hull,
    "theta": _cmd_theta,
    "verify-tao": _cmd_verify_tao,
    "chebotarev": _cmd_chebotarev,
    "submult": _cmd_submult,
    "extremal": _cmd_extremal,
    "verify-main": _cmd_verify_main,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourier-uncertainty",
        description="Exact uncertainty bounds and oracles for the DFT on finite abelian groups.",
    )
    parser.add_argument("--format", choices=["csv", "json"], default="csv")
    parser.add_argument("--output", metavar="PATH", default=None)
    parser.add_argument("--max-support-sets", type=int, default=None)
    parser.add_argument("--max-rank-tests", type=int, default=None)
    parser.add_argument(
        "--seed",
        type=int,
        default=0,
        help="seed for property commands that draw random signals (current commands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="the bound u(n,k) with its divisor neighbors")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)

    p = sub.add_parser("hull", help="the divisor polyline of n, evaluated at every integer k")
    p.add_argument("n", type=int)

    p = sub.add_parser("theta", help="brute-force theta(G,k) with a certified witness")
    p.add_argument("group_spec")
    p.add_argument("k", type=int)

    p = sub.add_parser("verify-tao", help="check theta(Z_p,k) = p+1-k for all k")
    p.add_argument("p", type=int)

    p = sub.add_parser("chebotarev", help="exhaustive square-submatrix nonsingularity check")
    p.add_argument("n", type=int)
    p.add_argument("--max-size", type=int, default=None)

    p = sub.add_parser("submult", help="verify u(d,s)u(n/d,t) >= u(n,st) for all n <= n_max")
    p.add_argument("n_max", type=int)

    p = sub.add_parser("extremal", help="subgroup-indicator function attaining the classical equality")
    p.add_argument("group_spec")
    p.add_argument("d", type=int)

    p = sub.add_parser("verify-main", help="sweep all k: oracle theta vs ceil(u(n,k))")
    p.add_argument("group_spec")
    return parser


def _render_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=report["columns"], lineterminator="\n")
    writer.writeheader()
    for row in report["rows"]:
        writer.writerow(row)
    return buf.getvalue()


def _render_json(report: dict) -> str:
    if "json" in report:
        payload = report["json"]
    else:
        payload = {"command": report["command"], "rows": report["rows"]}
    return json.dumps(payload, indent=2) + "\n"


def run_cli(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    budget_kwargs = {}
    if args.max_support_sets is not None:
        budget_kwargs["max_support_sets"] = args.max_support_sets
    if args.max_rank_tests is not None:
        budget_kwargs["max_rank_tests"] = args.max_rank_tests
    budget = SearchBudget(**budget_kwargs) if budget_kwargs else SearchBudget()
    try:
        code, report = _COMMANDS[args.command](args, budget)
    except (ValueError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = _render_csv(report) if args.format == "csv" else _render_json(report)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
    main()
