"""Command-line driver: verify claims, search polynomials, render tables.

Exit codes: 0 on success or a passing verification, 1 on a failed
verification or an exhausted search, 2 on usage errors (including cap
violations). Reports go to stdout, diagnostics to stderr. Invocations
are seedless and deterministic; only the sampling equivalence mode takes
a seed, with a fixed default.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import synth, tables, verify, xorform
from .gf2poly import Gf2Poly, smallest_factor

CLAIM_DEFAULT_NMAX = {
    "eq1": 12,
    "eq2": 12,
    "thm1": 8,
    "conjecture": 8,
    "lemma14": 8,
    "prop11": 8,
    "converse": 8,
}
CLAIM_ORDER = ["eq1", "eq2", "thm1", "conjecture", "lemma14", "prop11", "converse"]


def _run_claim(claim, n_max, d_max, threads, fail_fast):
    if claim == "eq1":
        return verify.verify_eq1(n_max, fail_fast=fail_fast)
    if claim == "eq2":
        return verify.verify_eq2(n_max, fail_fast=fail_fast)
    if claim == "thm1":
        return verify.verify_theorem1(n_max, threads=threads, fail_fast=fail_fast)
    if claim == "conjecture":
        return verify.verify_conjecture(n_max, threads=threads, fail_fast=fail_fast)
    if claim == "lemma14":
        return verify.verify_lemma14(n_max, threads=threads, fail_fast=fail_fast)
    if claim == "prop11":
        return verify.verify_prop11(n_max, d_max, fail_fast=fail_fast)
    if claim == "converse":
        return verify.verify_converse(n_max, threads=threads)
    raise ValueError(f"unknown claim {claim!r}")


def _cmd_verify(args) -> int:
    claims = CLAIM_ORDER if args.claim == "all" else [args.claim]
    reports = []
    for claim in claims:
        n_max = args.n_max if args.n_max is not None else CLAIM_DEFAULT_NMAX[claim]
        report = _run_claim(claim, n_max, args.d_max, args.threads, args.fail_fast)
        reports.append(report)
        if not args.json:
            print(report.summary())
        if args.fail_fast and not report.passed:
            break
    if args.json:
        payload = [r.to_dict() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_search(args) -> int:
    poly = Gf2Poly.parse(args.poly)
    if poly.degree >= 1 and not poly.is_irreducible():
        factor = smallest_factor(poly)
        print(
            f"error: {poly} is reducible, nontrivial factor ({factor})",
            file=sys.stderr,
        )
        return 2
    n = args.n if args.n is not None else poly.degree
    report = xorform.min_xor_count_for_poly(
        poly, n, t_max=args.t_max, threads=args.threads
    )
    print(report.to_json())
    return 0 if report.t is not None else 1


def _cmd_table(args) -> int:
    rows = tables.build_table(args.degree, t_max=args.t_max, threads=args.threads)
    rendered = tables.RENDERERS[args.format](rows, args.t_max)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(rendered)
    if args.figure:
        from .plotting import render_table_figure

        render_table_figure(rows, args.t_max, args.figure)
        print(f"wrote {args.figure}", file=sys.stderr)
    return 0


def _cmd_emit(args) -> int:
    poly = Gf2Poly.parse(args.poly)
    if poly.degree >= 1 and not poly.is_irreducible():
        factor = smallest_factor(poly)
        print(
            f"error: {poly} is reducible, nontrivial factor ({factor})",
            file=sys.stderr,
        )
        return 2
    n = args.n if args.n is not None else poly.degree
    report = xorform.min_xor_count_for_poly(
        poly, n, t_max=args.t_max, threads=args.threads
    )
    if report.witness is None:
        print(
            f"error: no witness for {poly} at t <= {args.t_max}; nothing to emit",
            file=sys.stderr,
        )
        return 1
    program = synth.emit_program(report.witness)
    realized = report.witness.realize()
    mode = args.check
    if not synth.check_equivalence(program, realized, mode=mode, seed=args.seed):
        print("error: emitted program failed equivalence check", file=sys.stderr)
        return 1
    if args.format == "netlist":
        print(program.to_netlist())
    else:
        payload = program.to_dict()
        payload["t"] = report.t
        payload["poly"] = str(poly)
        print(json.dumps(payload))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gf2xor",
        description="XOR-counts of constant multiplication in binary fields: "
        "verify identities, search, tabulate, synthesize.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run one claim suite or all of them")
    p_verify.add_argument("claim", choices=CLAIM_ORDER + ["all"])
    p_verify.add_argument("--n-max", type=int, default=None, dest="n_max")
    p_verify.add_argument(
        "--d-max", type=int, default=7, dest="d_max", help="power bound for prop11"
    )
    p_verify.add_argument("--json", action="store_true")
    p_verify.add_argument("--fail-fast", action="store_true", dest="fail_fast")
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.set_defaults(func=_cmd_verify)

    p_search = sub.add_parser("search", help="minimal XOR-count of one polynomial")
    p_search.add_argument("--poly", required=True)
    p_search.add_argument("--n", type=int, default=None)
    p_search.add_argument("--t-max", type=int, default=2, dest="t_max")
    p_search.add_argument("--threads", type=int, default=1)
    p_search.set_defaults(func=_cmd_search)

    p_table = sub.add_parser("table", help="per-degree table of minimal XOR-counts")
    p_table.add_argument("--degree", type=int, required=True)
    p_table.add_argument("--t-max", type=int, default=2, dest="t_max")
    p_table.add_argument("--format", choices=sorted(tables.RENDERERS), default="md")
    p_table.add_argument("--out", default=None, help="write the table to a file")
    p_table.add_argument(
        "--figure", default=None, help="also render a bar chart to this path"
    )
    p_table.add_argument("--threads", type=int, default=1)
    p_table.set_defaults(func=_cmd_table)

    p_emit = sub.add_parser("emit", help="verified straight-line XOR program")
    p_emit.add_argument("--poly", required=True)
    p_emit.add_argument("--n", type=int, default=None)
    p_emit.add_argument("--t-max", type=int, default=2, dest="t_max")
    p_emit.add_argument("--format", choices=["netlist", "json"], default="netlist")
    p_emit.add_argument("--check", choices=["exhaustive", "sample"], default="exhaustive")
    p_emit.add_argument("--seed", type=int, default=0)
    p_emit.add_argument("--threads", type=int, default=1)
    p_emit.set_defaults(func=_cmd_emit)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, IndexError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
