"""Command line front end.

Exit codes: 0 success, 2 unparseable input, 3 domain error, 4 budget
exceeded.  --format structured emits one JSON object on stdout.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import bitseq, cardinals, hyperops, ordinals, streams

PARSE_ERROR = 2
DOMAIN_ERROR = 3
BUDGET_ERROR = 4

_PARSE_EXCEPTIONS = (
    bitseq.NotationError,
    streams.StarStringError,
    ordinals.OrdinalParseError,
    cardinals.CardinalParseError,
)


def _emit(args, text: str, **fields):
    if args.format == "structured":
        print(json.dumps({"command": args.command, **fields}))
    else:
        print(text)


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise bitseq.NotationError(f"not a rational: {text!r}") from err


def _parse_stream(text: str) -> streams.StreamDescriptor:
    text = text.strip()
    if text == "pi/4":
        return streams.PI_OVER_4
    m = re.fullmatch(r"sqrt\((\d+)/(\d+)\)", text)
    if m:
        return streams.SqrtStream(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"(\d+)/(\d+)", text)
    if m:
        return streams.rational(int(m.group(1)), int(m.group(2)))
    if streams.has_algorithm(text):
        return streams.CustomStream(text)
    raise streams.StarStringError(
        f"unknown stream {text!r}; use p/q, pi/4 or sqrt(p/q)"
    )


def _decimal_str(value: Fraction, digits: int) -> str:
    """Truncated decimal with an explicit continuation mark."""
    sign = "-" if value < 0 else ""
    value = abs(value)
    whole, rest = divmod(value.numerator, value.denominator)
    if rest == 0:
        return f"{sign}{whole}"
    scaled = rest * 10**digits // value.denominator
    frac = str(scaled).rjust(digits, "0")
    exact = Fraction(scaled, 10**digits) == Fraction(rest, value.denominator)
    if exact:
        return f"{sign}{whole}.{frac.rstrip('0')}"
    return f"{sign}{whole}.{frac}…"


# ---------------------------------------------------------------------------
# subcommands


def _cmd_convert(args) -> int:
    u = bitseq.parse_universal(args.value)
    value = bitseq.decode_universal(u)
    canon = bitseq.canonicalize(u)
    if args.to == "rational":
        _emit(args, str(value), rational=str(value))
    elif args.to == "notation":
        _emit(args, str(canon), notation=str(canon))
    elif args.to == "set":
        rendered = bitseq.render_universal_set(canon)
        _emit(args, rendered, set=rendered)
    else:
        text = _decimal_str(value, args.digits)
        _emit(args, text, decimal=text)
    return 0


def _cmd_eval_left(args) -> int:
    left = bitseq.parse_left(args.value)
    _emit(args, str(left.value), rational=str(left.value))
    return 0


def _cmd_complement(args) -> int:
    out = bitseq.complement(bitseq.parse_universal(args.value))
    _emit(args, str(out), notation=str(out), rational=str(out.value))
    return 0


def _cmd_flip(args) -> int:
    out = bitseq.flip(bitseq.parse_universal(args.value), raw=args.raw)
    _emit(args, str(out), notation=str(out), rational=str(out.value))
    return 0


def _cmd_bits(args) -> int:
    prefix = streams.as_stream(_parse_stream(args.stream)).bits(args.n)
    text = "".join(str(b) for b in prefix)
    _emit(args, text, bits=text)
    return 0


def _cmd_interval(args) -> int:
    box = streams.parse_star_string(args.observation)
    text = f"{box} width {streams.dyadic_str(box.width)}"
    _emit(
        args,
        text,
        lo=str(box.lo),
        hi=str(box.hi),
        width=str(box.width),
    )
    return 0


def _cmd_hyper(args) -> int:
    result = hyperops.hyper(args.m, args.k, args.n, args.budget)
    if isinstance(result, hyperops.Exceeded):
        _emit(
            args,
            f"exceeds {args.budget}-bit budget: {result.describe()}",
            exceeded=True,
            description=result.describe(),
        )
        return BUDGET_ERROR
    _emit(args, str(result.value), value=str(result.value))
    return 0


def _cmd_ord(args) -> int:
    if args.action == "eval":
        v = ordinals.parse_ordinal(args.expr[0])
        _emit(args, ordinals.format_ordinal(v), ordinal=ordinals.format_ordinal(v))
        return 0
    if args.action == "cmp":
        a, b = (ordinals.parse_ordinal(e) for e in args.expr)
        if isinstance(a, ordinals.EpsilonZero) or isinstance(b, ordinals.EpsilonZero):
            eps = ordinals.EPSILON_0
            c = 0 if a is b else (1 if a is eps else -1)
        else:
            c = ordinals.ord_cmp(a, b)
        text = "<=>"[c + 1]
        _emit(args, text, relation=text)
        return 0
    v = ordinals.parse_ordinal(args.expr[0])
    out = ordinals.fundamental(v, args.n)
    _emit(args, ordinals.format_ordinal(out), ordinal=ordinals.format_ordinal(out))
    return 0


def _cmd_card(args) -> int:
    if args.action == "normalize":
        expr = cardinals.parse_cardinal(args.expr[0])
        normal, trace = cardinals.normalize_with_trace(expr, args.budget)
        if args.trace:
            for step in trace:
                line = (
                    f"{step.rule}: {cardinals.format_cardinal(step.before)}"
                    f" -> {cardinals.format_cardinal(step.after)}"
                )
                if args.format != "structured":
                    print(line)
        _emit(
            args,
            cardinals.format_cardinal(normal),
            cardinal=cardinals.format_cardinal(normal),
            trace=[
                {
                    "rule": s.rule,
                    "before": cardinals.format_cardinal(s.before),
                    "after": cardinals.format_cardinal(s.after),
                }
                for s in trace
            ],
        )
        return 0
    if args.action == "cmp":
        e1, e2 = (cardinals.parse_cardinal(e) for e in args.expr)
        rel = cardinals.compare(e1, e2, args.budget)
        _emit(args, rel.value, relation=rel.value)
        return 0
    table = cardinals.unification_table(args.max)
    rows = [
        (
            str(i),
            cardinals.format_cardinal(a),
            cardinals.format_cardinal(p),
            cardinals.format_cardinal(b),
        )
        for i, a, p, b in table.rows()
    ]
    header = ("a", "aleph_a", "2^aleph_(a-1)", "choose(aleph_(a-1))")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(4)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in [header] + rows]
    _emit(
        args,
        "\n".join(lines),
        rows=[dict(zip(("alpha", "aleph", "powerset", "binomial"), r)) for r in rows],
        consistent=table.consistent,
    )
    return 0


def _cmd_diag(args) -> int:
    inputs = [_parse_stream(s) for s in args.stream]
    prefix = streams.diagonal(inputs).bits(args.n)
    text = "".join(str(b) for b in prefix)
    _emit(args, text, bits=text)
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="uns",
        description="two-way binary sequences, bit streams, explosive "
        "operators, ordinals and symbolic cardinals",
    )
    top.add_argument(
        "--format", choices=("text", "structured"), default="text"
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="re-render a two-way sequence")
    p.add_argument("value")
    p.add_argument(
        "--to",
        choices=("rational", "notation", "set", "decimal"),
        default="rational",
    )
    p.add_argument("--digits", type=int, default=12)
    p.set_defaults(fn=_cmd_convert)

    p = sub.add_parser("eval-left", help="rational value of a left sequence")
    p.add_argument("value")
    p.set_defaults(fn=_cmd_eval_left)

    p = sub.add_parser("complement", help="bitwise complement (negation)")
    p.add_argument("value")
    p.set_defaults(fn=_cmd_complement)

    p = sub.add_parser("flip", help="mirror a sequence around the point")
    p.add_argument("value")
    p.add_argument("--raw", action="store_true", help="skip canonicalization")
    p.set_defaults(fn=_cmd_flip)

    p = sub.add_parser("bits", help="exact expansion prefix of a stream")
    p.add_argument("stream")
    p.add_argument("-n", type=int, default=16)
    p.set_defaults(fn=_cmd_bits)

    p = sub.add_parser("interval", help="interval pinned by an observation")
    p.add_argument("observation", help="e.g. '.110***'")
    p.set_defaults(fn=_cmd_interval)

    p = sub.add_parser("hyper", help="explosive operator m (x)^k n")
    p.add_argument("m", type=int)
    p.add_argument("k", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--budget", type=int, default=hyperops.DEFAULT_BUDGET)
    p.set_defaults(fn=_cmd_hyper)

    p = sub.add_parser("ord", help="ordinal arithmetic below eps_0")
    p.add_argument("action", choices=("eval", "cmp", "fund"))
    p.add_argument("expr", nargs="+")
    p.add_argument("-n", type=int, default=3, help="index for fund")
    p.set_defaults(fn=_cmd_ord)

    p = sub.add_parser("card", help="symbolic cardinal rewriting")
    p.add_argument("action", choices=("normalize", "cmp", "table"))
    p.add_argument("expr", nargs="*")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--budget", type=int, default=hyperops.DEFAULT_BUDGET)
    p.add_argument("--max", type=int, default=5, help="rows for table")
    p.set_defaults(fn=_cmd_card)

    p = sub.add_parser("diag", help="diagonal stream over other streams")
    p.add_argument("stream", nargs="*")
    p.add_argument("-n", type=int, default=16)
    p.set_defaults(fn=_cmd_diag)

    return top


def _validate_counts(args):
    if args.command == "ord":
        want = 2 if args.action == "cmp" else 1
        if len(args.expr) != want:
            raise SystemExit(PARSE_ERROR)
    if args.command == "card":
        want = {"normalize": 1, "cmp": 2, "table": 0}[args.action]
        if len(args.expr) != want:
            raise SystemExit(PARSE_ERROR)


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _validate_counts(args)
    except SystemExit as stop:
        return stop.code if stop.code else 0
    try:
        return args.fn(args)
    except cardinals.FiniteBudgetError as err:
        print(f"error: {err}", file=sys.stderr)
        return BUDGET_ERROR
    except _PARSE_EXCEPTIONS as err:
        print(f"error: {err}", file=sys.stderr)
        return PARSE_ERROR
    except (ValueError, TypeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return DOMAIN_ERROR


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
