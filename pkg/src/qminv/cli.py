"""Command-line front end.

Subcommands:

* ``invariant`` -- evaluate one invariant, optionally on both routes.
* ``series``    -- verify a generating-series identity to a truncation.
* ``sweep``     -- compare oracle and closed form over a (w, g) grid.
* ``selfcheck`` -- run the built-in property suites.

Exit codes are the machine contract: 0 success, 2 route or identity
disagreement, 3 unsupported query in strict mode, 4 invalid input.
Rationals are printed exactly as "p/q" strings, never as decimals,
unless an approximation is explicitly requested with --decimal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .arith import InvariantQuery, canonical_u_choice
from .invariants import (
    ROUTE_CLOSED,
    ROUTE_ORACLE,
    UnsupportedQueryError,
    qm_degree_zero,
    qm_elliptic_closed,
    qm_elliptic_oracle,
    qm_moduli,
    series_identity_even,
    series_identity_odd,
)
from .quotloc import UnsupportedComponentError
from .selfcheck import run_selfcheck

EXIT_OK = 0
EXIT_DISAGREE = 2
EXIT_UNSUPPORTED = 3
EXIT_INVALID = 4

DEFAULT_SERIES_ORDER = 50
TRUNCATION_ENV = "QM_TRUNCATION_DEFAULT"


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with code 4."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID)


def _fmt(value: Fraction) -> str:
    return str(value)


def _breakdown_payload(breakdown) -> list[dict]:
    return [{"m": m, "contribution": _fmt(c)} for m, c in breakdown]


def _emit(payload: dict, args, table_lines: list[str]) -> None:
    if args.format == "json":
        text = json.dumps(payload)
        print(text)
    else:
        print("\n".join(table_lines))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(json.dumps(payload) + "\n")


def _build_query(args) -> InvariantQuery:
    u_choice = None if args.deg_a == 1 else canonical_u_choice(args.rank, args.deg_a)
    return InvariantQuery(
        r=args.rank,
        d=args.deg_d,
        a=args.deg_a,
        w=args.degree_w,
        g=args.genus,
        u_choice=u_choice,
    )


def _result_for(query: InvariantQuery, route: str, side: str, strict: bool):
    if side == "moduli":
        return qm_moduli(query, route=route, strict=strict)
    if route == ROUTE_CLOSED:
        return qm_elliptic_closed(query)
    return qm_elliptic_oracle(query, strict=strict)


def _cmd_invariant(args) -> int:
    query = _build_query(args)
    strict = not args.permissive
    checks = []
    routes_payload = None

    if query.w == 0:
        result = qm_degree_zero(query)
        route_label = result.route
    elif args.route == "both":
        closed = _result_for(query, ROUTE_CLOSED, args.side, strict)
        oracle = _result_for(query, ROUTE_ORACLE, args.side, strict)
        agree = closed.value_t == oracle.value_t
        checks.append({"name": "route_agreement", "pass": agree})
        routes_payload = {
            ROUTE_CLOSED: {
                "value": _fmt(closed.value_t),
                "breakdown": _breakdown_payload(closed.breakdown),
            },
            ROUTE_ORACLE: {
                "value": _fmt(oracle.value_t),
                "breakdown": _breakdown_payload(oracle.breakdown),
            },
        }
        result = oracle
        route_label = "both"
        if not agree:
            payload, lines = _invariant_payload(
                query, args, result, route_label, checks, routes_payload
            )
            _emit(payload, args, lines)
            print(
                f"route disagreement: closed={closed.value_t} oracle={oracle.value_t}",
                file=sys.stderr,
            )
            return EXIT_DISAGREE
    else:
        route = ROUTE_CLOSED if args.route == "closed" else ROUTE_ORACLE
        result = _result_for(query, route, args.side, strict)
        route_label = result.route

    payload, lines = _invariant_payload(
        query, args, result, route_label, checks, routes_payload
    )
    _emit(payload, args, lines)
    return EXIT_OK


def _invariant_payload(query, args, result, route_label, checks, routes_payload):
    payload = {
        "query": {
            "r": query.r,
            "d": query.d,
            "a": query.a,
            "w": query.w,
            "g": query.g,
            "side": args.side,
        },
        "value": _fmt(result.value_t),
        "route": route_label,
        "conjectural": result.conjectural,
        "breakdown": _breakdown_payload(result.breakdown),
    }
    if routes_payload is not None:
        payload["routes"] = routes_payload
    if checks:
        payload["identity_checks"] = checks
    if args.decimal:
        payload["approx"] = float(result.value_t)
    if args.raw:
        payload["raw"] = f"({_fmt(result.value_t)})*t"

    lines = [
        f"query        r={query.r} d={query.d} a={query.a} w={query.w} g={query.g} side={args.side}",
        f"value        {payload['value']}",
        f"route        {route_label}",
        f"conjectural  {'yes' if result.conjectural else 'no'}",
    ]
    if result.breakdown:
        pieces = "; ".join(f"m={m}: {_fmt(c)}" for m, c in result.breakdown)
        lines.append(f"breakdown    {pieces}")
    if routes_payload is not None:
        for name, data in routes_payload.items():
            lines.append(f"{name:<12} value {data['value']}")
    for check in checks:
        lines.append(f"check        {check['name']}: {'pass' if check['pass'] else 'FAIL'}")
    if args.decimal:
        lines.append(f"approx       {payload['approx']} (decimal approximation)")
    if args.raw:
        lines.append(f"raw          {payload['raw']}")
    return payload, lines


def _cmd_series(args) -> int:
    if args.order < 1:
        print("series order must be >= 1", file=sys.stderr)
        return EXIT_INVALID
    check = (
        series_identity_odd(args.genus, args.order)
        if args.identity == "A"
        else series_identity_even(args.genus, args.order)
    )
    coefficients = [
        {
            "w": w,
            "lhs": _fmt(check.lhs.coefficient(w)),
            "rhs": _fmt(check.rhs.coefficient(w)),
        }
        for w in range(1, args.order + 1)
    ]
    payload = {
        "identity": args.identity,
        "genus": args.genus,
        "order": args.order,
        "equal": check.equal,
        "coefficients": coefficients,
    }
    lines = [f"identity {args.identity}  genus {args.genus}  order {args.order}", "w lhs rhs"]
    for row in coefficients:
        lines.append(f"{row['w']} {row['lhs']} {row['rhs']}")
    lines.append(f"verdict: {'PASS' if check.equal else 'FAIL'}")
    _emit(payload, args, lines)
    return EXIT_OK if check.equal else EXIT_DISAGREE


def _parse_genus_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    if "," in text:
        return [int(part) for part in text.split(",") if part]
    return [int(text)]


def _cmd_sweep(args) -> int:
    strict = not args.permissive
    genera = _parse_genus_range(args.g)
    if args.w_list is not None:
        ws = [int(part) for part in args.w_list.split(",") if part]
    else:
        ws = list(range(1, args.w_max + 1))
    records = []
    total = agree = conjectural = 0
    for g in genera:
        for w in ws:
            u = None if args.deg_a == 1 else canonical_u_choice(args.rank, args.deg_a)
            query = InvariantQuery(
                r=args.rank, d=args.deg_d, a=args.deg_a, w=w, g=g, u_choice=u
            )
            closed = qm_elliptic_closed(query)
            oracle = qm_elliptic_oracle(query, strict=strict)
            point_agree = closed.value_t == oracle.value_t
            total += 1
            agree += point_agree
            conjectural += oracle.conjectural
            records.append(
                {
                    "query": {"r": query.r, "d": query.d, "a": query.a, "w": w, "g": g},
                    "closed": _fmt(closed.value_t),
                    "oracle": _fmt(oracle.value_t),
                    "agree": point_agree,
                    "conjectural": oracle.conjectural,
                }
            )
    summary = {"total": total, "agree": agree, "conjectural": conjectural}
    if args.format == "json":
        for record in records:
            print(json.dumps(record))
        print(json.dumps({"summary": summary}))
    else:
        for record in records:
            q = record["query"]
            flag = "agree" if record["agree"] else "DISAGREE"
            print(
                f"g={q['g']} w={q['w']} closed={record['closed']} "
                f"oracle={record['oracle']} {flag}"
            )
        print(f"{agree}/{total} agree")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            for record in records:
                handle.write(json.dumps(record) + "\n")
            handle.write(json.dumps({"summary": summary}) + "\n")
    return EXIT_OK if agree == total else EXIT_DISAGREE


def _cmd_selfcheck(_args) -> int:
    results = run_selfcheck()
    failures = 0
    for name, ok, detail in results:
        if ok:
            print(f"ok   {name}")
        else:
            failures += 1
            print(f"FAIL {name}  {detail}")
    print(f"{len(results) - failures}/{len(results)} checks passed")
    return EXIT_OK if failures == 0 else 1


def _add_query_flags(parser, include_genus: bool = True) -> None:
    parser.add_argument("-r", "--rank", type=int, required=True, help="rank (>= 2)")
    parser.add_argument("-d", "--deg-d", type=int, required=True, help="degree on the base curve")
    parser.add_argument("-a", "--deg-a", type=int, required=True, help="degree on the elliptic curve, in [0, rank)")
    if include_genus:
        parser.add_argument("-g", "--genus", type=int, required=True, help="genus of the base curve (>= 2)")


def _add_mode_flags(parser) -> None:
    mode = parser.add_mutually_exclusive_group()
    mode.add_argument("--strict", action="store_true", default=True, help="reject unanalysed wall components (default)")
    mode.add_argument("--permissive", action="store_true", help="apply the conjectural fallback to unanalysed components and flag the output")


def _add_output_flags(parser) -> None:
    parser.add_argument("--format", choices=("table", "json"), default="table", help="output format (identical data either way)")
    parser.add_argument("--out", help="also write the JSON payload to this file")


def build_parser() -> _Parser:
    parser = _Parser(prog="qminv", description="Exact quasimap / Vafa-Witten invariants of Higgs-bundle moduli")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    inv = sub.add_parser("invariant", help="evaluate one invariant")
    _add_query_flags(inv)
    inv.add_argument("-w", "--degree-w", type=int, required=True, help="quasimap degree (>= 0)")
    inv.add_argument("--route", choices=("closed", "oracle", "both"), default="both", help="evaluation route (default: both, with agreement check)")
    inv.add_argument("--side", choices=("elliptic", "moduli"), default="elliptic", help="report the elliptic-side value or the moduli-side value (r^(2g) times larger)")
    inv.add_argument("--decimal", action="store_true", help="add a clearly marked decimal approximation")
    inv.add_argument("--raw", action="store_true", help="also print the raw t-linear form")
    _add_mode_flags(inv)
    _add_output_flags(inv)

    ser = sub.add_parser("series", help="verify a generating-series identity")
    ser.add_argument("--identity", choices=("A", "B"), required=True, help="A: odd-degree difference identity; B: even-degree sum identity")
    ser.add_argument("--genus", type=int, required=True)
    ser.add_argument(
        "--order",
        type=int,
        default=int(os.environ.get(TRUNCATION_ENV, DEFAULT_SERIES_ORDER)),
        help=f"truncation order (default: ${TRUNCATION_ENV} or {DEFAULT_SERIES_ORDER})",
    )
    _add_output_flags(ser)

    swp = sub.add_parser("sweep", help="compare oracle and closed form over a grid")
    _add_query_flags(swp, include_genus=False)
    degrees = swp.add_mutually_exclusive_group(required=True)
    degrees.add_argument("--w-max", type=int, help="sweep w = 1..w-max")
    degrees.add_argument("--w-list", help="comma-separated list of degrees")
    swp.add_argument("--g", required=True, help="genus range, e.g. 2..5 or 2,4 or 3")
    _add_mode_flags(swp)
    _add_output_flags(swp)

    sub.add_parser("selfcheck", help="run the built-in property suites")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    if not hasattr(args, "permissive"):
        args.permissive = False
    handlers = {
        "invariant": _cmd_invariant,
        "series": _cmd_series,
        "sweep": _cmd_sweep,
        "selfcheck": _cmd_selfcheck,
    }
    try:
        return handlers[args.command](args)
    except (UnsupportedComponentError, UnsupportedQueryError) as exc:
        print(f"unsupported query: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
