"""Command-line front end: ``knotsym <command> ...``.

Exit status: 0 on success (or "equal"), 1 on a domain error (or "not
equal"), 2 on a usage error.  Domain errors print their class name on stderr.
"""

import argparse
import json
import re
import sys

from .cycles import ALPHA, DELTA, all_cycles, cycle
from .errors import KnotSymbolError, NoSuchArc
from .formats import EMPTY_TEXT, from_gauss, parse_symbol, serialize_symbol
from .moves import apply_move
from .reduce import DEFAULT_CLOSURE_CAP, crossing_number, knots_equal, reduced_set, reduction_trace
from .symbol import MainArc

_ARC = re.compile(r"(\d+)([+-]?)")


class UsageError(Exception):
    pass


def _show(symbol) -> str:
    return serialize_symbol(symbol) or EMPTY_TEXT


def _arc(text: str) -> MainArc:
    m = _ARC.fullmatch(text.strip())
    if not m:
        raise UsageError(f"bad arc {text!r}; expected e.g. 15+ or 3-")
    return MainArc(int(m[1]), -1 if m[2] == "-" else 1)


def _cycle_json(c):
    return {"orientation": str(c.orientation), "arcs": [str(a) for a in c.arcs]}


def _symbols(args, count):
    """The input symbols: positionals, or the lines of ``--file``."""
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                texts = [line.strip() for line in fh if line.strip()]
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
    else:
        texts = list(args.symbols)
    if count is not None and len(texts) != count:
        raise UsageError(f"{args.command} expects {count} symbol(s), got {len(texts)}")
    return [parse_symbol(t) for t in texts]


# each command returns (plain text lines, json payload, exit status)


def cmd_reduce(args):
    (symbol,) = _symbols(args, 1)
    final, steps = reduction_trace(symbol)
    lines = [_show(final)]
    if args.trace:
        lines += [f"  {s.move} -> {_show(s.result)}" for s in steps]
    payload = {"result": serialize_symbol(final), "order": final.order,
               "trace": [{"move": s.move, "result": serialize_symbol(s.result)} for s in steps]}
    return lines, payload, 0


def cmd_invariant(args):
    (symbol,) = _symbols(args, 1)
    rs = reduced_set(symbol, cap=args.closure_cap)
    lines = [_show(m) for m in rs]
    if args.trace:
        lines += [f"  {s.move} -> {_show(s.result)}" for s in rs.trace]
    payload = {"order": rs.order, "count": len(rs), "members": [serialize_symbol(m) for m in rs],
               "trace": [{"move": s.move, "result": serialize_symbol(s.result)} for s in rs.trace]}
    return lines, payload, 0


def cmd_eq(args):
    a, b = _symbols(args, 2)
    equal = knots_equal(a, b, cap=args.closure_cap)
    return ["true" if equal else "false"], {"equal": equal}, 0 if equal else 1


def cmd_crossings(args):
    (symbol,) = _symbols(args, 1)
    n = crossing_number(symbol)
    return [str(n)], {"crossings": n}, 0


def cmd_cycles(args):
    (symbol,) = _symbols(args, 1)
    if args.arc is None:
        found = all_cycles(symbol)
    else:
        f = _arc(args.arc)
        if not 1 <= f.base <= 2 * symbol.order:
            raise NoSuchArc(f"no arc {f} in a symbol of order {symbol.order}")
        found = [cycle(symbol, f, ALPHA), cycle(symbol, f, DELTA)]
    lines = [f"{c.orientation} {c}" for c in found]
    return lines, {"cycles": [_cycle_json(c) for c in found]}, 0


def cmd_apply(args):
    (symbol,) = _symbols(args, 1)
    try:
        result = apply_move(symbol, args.move)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return [_show(result)], {"move": args.move, "result": serialize_symbol(result),
                             "order": result.order}, 0


def cmd_from_gauss(args):
    symbol = from_gauss(args.code)
    return [_show(symbol)], {"result": serialize_symbol(symbol), "order": symbol.order}, 0


def cmd_validate(args):
    (symbol,) = _symbols(args, 1)
    return [f"valid, order {symbol.order}"], {"valid": True, "order": symbol.order,
                                             "canonical": serialize_symbol(symbol)}, 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")
    common.add_argument("--trace", action="store_true", help="show the negative moves taken")
    common.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP, metavar="N",
                        help="abort closures larger than N symbols (default %(default)s)")
    common.add_argument("--file", metavar="PATH", help="read symbols from PATH, one per line")

    parser = argparse.ArgumentParser(prog="knotsym", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, nsyms="?"):
        p = sub.add_parser(name, parents=[common], help=help)
        if nsyms is not None:
            p.add_argument("symbols", nargs=nsyms, metavar="SYMBOL", default=[])
        p.set_defaults(func=fn)
        return p

    add("reduce", cmd_reduce, "apply negative moves until none is left")
    add("invariant", cmd_invariant, "print the reduced set")
    add("eq", cmd_eq, "decide whether two symbols are the same knot", nsyms="*")
    add("crossings", cmd_crossings, "crossing number")
    p = add("cycles", cmd_cycles, "cycles of an arc, or all cycles")
    p.add_argument("--arc", help="main arc, e.g. 15+ or 3-")
    p = add("apply", cmd_apply, "apply one move, e.g. r1+:2,+1,alpha or beta:3")
    p.add_argument("--move", required=True)
    p = add("from-gauss", cmd_from_gauss, "convert a signed Gauss code", nsyms=None)
    p.add_argument("code", help='e.g. "O1+ U2+ O3+ U1+ O2+ U3+"')
    add("validate", cmd_validate, "check a symbol and print its order")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if isinstance(getattr(args, "symbols", None), str):
        args.symbols = [args.symbols]
    if args.closure_cap <= 0:
        parser.error("--closure-cap must be positive")
    try:
        lines, payload, status = args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except KnotSymbolError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return status


if __name__ == "__main__":
    sys.exit(main())
