"""Command-line front end: ``hooklab <subcommand> ...``.

Exit status: 0 on success, 2 for parse and usage errors, 3 for domain and
singular errors, 4 for verification failures and failed guesses.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .catalog import builtin_catalog, export_catalog, get_entry, verify_all, verify_entry
from .errors import DomainError, HookError, ParseError, SingularError
from .etamake import etamake
from .expr import eval_series, parse, parse_value, weights_from_expr
from .guess import guess_hypergeometric, guess_rational
from .structures import KINDS, hookexp, hookgen
from .weights import WeightTable

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_FAIL = 0, 2, 3, 4
FALLBACK_N = 10


@dataclass
class CliConfig:
    subcommand: str
    kind: str | None = None
    n: int | None = None
    f: str | None = None
    rho_list: str | None = None
    rho_expr: str | None = None
    params: list = field(default_factory=list)
    json: bool = False


def default_order() -> int:
    raw = os.environ.get("HOOKLAB_DEFAULT_N")
    if raw is None:
        return FALLBACK_N
    try:
        n = int(raw)
    except ValueError:
        raise ParseError(f"HOOKLAB_DEFAULT_N must be an integer, got {raw!r}") from None
    if n < 0:
        raise ParseError("HOOKLAB_DEFAULT_N must be non-negative")
    return n


def split_top_level(text: str) -> list[str]:
    """Split on commas outside parentheses, so ``binomial(n,2)`` stays whole."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    tail = "".join(cur).strip()
    if tail or parts:
        parts.append(tail)
    if any(not p for p in parts):
        raise ParseError("empty entry in comma-separated list")
    return parts


def _params(args) -> list[str] | None:
    names: list[str] = []
    for item in args.param or []:
        names.extend(p.strip() for p in item.split(",") if p.strip())
    if "x" in names:
        raise ParseError("x is the series variable and cannot be a parameter")
    return names or None


def _order(args) -> int:
    n = args.n if args.n is not None else default_order()
    if n < 0:
        raise ParseError("--n must be non-negative")
    return n


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def cmd_hookexp(args) -> int:
    n = _order(args)
    f = eval_series(parse(args.f), n, params=_params(args))
    table = hookexp(args.type, f, n)
    _emit(args, str(table), table.to_json())
    return EXIT_OK


def cmd_hookgen(args) -> int:
    n = _order(args)
    params = _params(args)
    if args.rho_list is not None:
        values = [parse_value(v, params) for v in split_top_level(args.rho_list)]
        if len(values) < n:
            raise ParseError(f"--rho-list has {len(values)} values but --n is {n}")
        table = WeightTable(tuple(values[:n]))
    else:
        table = WeightTable(tuple(weights_from_expr(args.rho_expr, n, params=params)))
    f = hookgen(args.type, table, n)
    _emit(args, str(f), f.to_json())
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.id:
        try:
            entry = get_entry(args.id)
        except KeyError as err:
            raise ParseError(str(err.args[0])) from None
        reports = [verify_entry(entry, args.n)]
        ok = not reports[0].counts_as_failure
        payload = reports[0].to_json()
    else:
        summary = verify_all(args.n, jobs=args.jobs)
        reports, ok, payload = summary.reports, summary.ok, summary.to_json()
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for r in reports:
            print(r.line())
        if not args.id:
            failed = sum(r.counts_as_failure for r in reports)
            print(f"{len(reports)} entries, {failed} failures")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_guess(args) -> int:
    values = [parse_value(v, []).to_fraction() for v in split_top_level(args.values)]
    form = None
    if not args.hyper:
        form = guess_rational(values, n0=args.n0)
    if form is None:
        form = guess_hypergeometric(values, n0=args.n0)
    if form is None:
        msg = "no closed form found"
        if args.json:
            print(json.dumps({"found": False, "message": msg}))
        else:
            print(msg, file=sys.stderr)
        return EXIT_FAIL
    _emit(args, form.describe(), {"found": True, **form.to_json()})
    return EXIT_OK


def cmd_etamake(args) -> int:
    n = _order(args)
    f = eval_series(parse(args.f), n, params=_params(args))
    q = etamake(f, n)
    if args.json:
        print(json.dumps(q.to_json(), indent=2))
    else:
        print(q.render())
        for w in q.warnings():
            print(f"warning: {w}", file=sys.stderr)
    return EXIT_OK


def cmd_catalog(args) -> int:
    data = export_catalog()
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(data, fh, indent=2)
    if args.json:
        print(json.dumps(data, indent=2))
    elif not args.output:
        for e in builtin_catalog():
            print(f"{e.id:<30} {e.kind:<3} {e.status:<10} rho = {e.weight_text}    f = {e.gf}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hooklab",
                                description="Hook length expansions with exact arithmetic.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    def common(sp, order=True):
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if order:
            sp.add_argument("--n", type=int, help="truncation order (default $HOOKLAB_DEFAULT_N or 10)")

    def typed(sp):
        sp.add_argument("--type", required=True, type=str.upper, choices=KINDS)
        sp.add_argument("--param", action="append", metavar="NAME",
                        help="declare a symbolic parameter (repeatable, or comma-separated)")

    sp = sub.add_parser("hookexp", help="weights rho(1..N) for a generating function")
    typed(sp)
    sp.add_argument("--f", required=True, help="generating function in x")
    common(sp)
    sp.set_defaults(run=cmd_hookexp)

    sp = sub.add_parser("hookgen", help="generating function for a weight table")
    typed(sp)
    src = sp.add_mutually_exclusive_group(required=True)
    src.add_argument("--rho-list", help='comma-separated weights, e.g. "1,1/4,1/9"')
    src.add_argument("--rho-expr", help="weight as an expression in n")
    common(sp)
    sp.set_defaults(run=cmd_hookgen)

    sp = sub.add_parser("verify", help="check built-in hook length formulas")
    sp.add_argument("--id", help="a single catalog entry")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(sp)
    sp.set_defaults(run=cmd_verify)

    sp = sub.add_parser("guess", help="closed form for a rational sequence")
    sp.add_argument("--values", required=True, help='comma-separated values, e.g. "2,3/4,2/5"')
    sp.add_argument("--n0", type=int, default=1, help="index of the first value")
    sp.add_argument("--hyper", action="store_true", help="look for a hypergeometric term only")
    common(sp, order=False)
    sp.set_defaults(run=cmd_guess)

    sp = sub.add_parser("etamake", help="express a series as an eta quotient")
    sp.add_argument("--f", required=True, help="series in x with constant term 1")
    sp.add_argument("--param", action="append", metavar="NAME", help=argparse.SUPPRESS)
    common(sp)
    sp.set_defaults(run=cmd_etamake)

    sp = sub.add_parser("catalog", help="list or export the built-in formulas")
    sp.add_argument("--output", help="write the catalog as JSON to this file")
    common(sp, order=False)
    sp.set_defaults(run=cmd_catalog)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.run(args)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return EXIT_PARSE
    except SingularError as err:
        print(str(err), file=sys.stderr)
        print(f"partial table: {err.partial}", file=sys.stderr)
        if getattr(args, "json", False):
            print(json.dumps({"error": str(err), "n": err.n, "partial": err.partial.to_json()}))
        return EXIT_DOMAIN
    except (HookError, DomainError, ValueError, ZeroDivisionError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())
