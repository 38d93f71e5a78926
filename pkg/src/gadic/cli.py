"""Command line front end.

Every subcommand prints either pure literals, one per line, ready to be
parsed back, or (for notebook) a report.  Exit codes: 0 on success, 1
when the notebook report contains a failure, 2 on domain errors like a
non-residue or a bad digit, 64 on usage errors.  Computations never
touch the network or read environment variables; state ends at process
exit unless --out writes the output to a file.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .digits import DigitExpansion
from .errors import GadicError
from .hensel import gadic_roots
from .logarithm import log_gadic
from .notation import (
    parse_literal,
    render_default,
    render_dotted,
    render_tail,
)
from .notebook import render_json, render_text, run_notebook
from .polynomials import IntPolynomial
from .roots import quadratic_periods, sqrt_binomial, sqrt_hensel
from .crt import idempotents

USAGE_ERROR = 64

# default precision per subcommand, matching where the notebook works
_DEFAULT_PREC = {
    "sqrt": 6,
    "hensel": 3,
    "idempotents": 12,
    "periods": 6,
    "log": 7,
}


class _Parser(argparse.ArgumentParser):
    """argparse's own usage-error exit code is 2; this CLI reserves 2 for
    domain errors, so usage problems exit 64 instead."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _render(x: DigitExpansion, fmt: str | None) -> str:
    if fmt == "dotted":
        return render_dotted(x)
    if fmt == "tail":
        return render_tail(x)
    return render_default(x)


def _prec(args: argparse.Namespace) -> int:
    return args.prec if args.prec is not None else _DEFAULT_PREC[args.command]


def _cmd_sqrt(args: argparse.Namespace, parser: _Parser) -> int:
    prec = _prec(args)
    if args.method == "binomial":
        principal = sqrt_binomial(args.a, args.base, prec)
        negated = -principal
    else:
        principal, negated = sqrt_hensel(args.a, args.base, prec)
    lines = [_render(principal, args.format)]
    if args.both:
        lines.append(_render(negated, args.format))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_hensel(args: argparse.Namespace, parser: _Parser) -> int:
    f = IntPolynomial.from_string(args.poly)
    roots = gadic_roots(f, args.base, _prec(args))
    lines = [_render(lr.root, args.format) for lr in roots]
    _emit("\n".join(lines) + ("\n" if lines else ""), args.out)
    return 0


def _cmd_idempotents(args: argparse.Namespace, parser: _Parser) -> int:
    out = idempotents(args.base, _prec(args))
    _emit("\n".join(_render(e, args.format) for e in out) + "\n", args.out)
    return 0


def _cmd_periods(args: argparse.Namespace, parser: _Parser) -> int:
    pair = quadratic_periods(args.base, _prec(args))
    lines = [_render(pair.a, args.format), _render(pair.b, args.format)]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_log(args: argparse.Namespace, parser: _Parser) -> int:
    x = parse_literal(args.x, args.base, _prec(args))
    if args.prec is not None and x.precision > args.prec:
        x = x.truncate(args.prec)
    value = log_gadic(x)
    _emit(_render(value, args.format) + "\n", args.out)
    return 0


def _cmd_convert(args: argparse.Namespace, parser: _Parser) -> int:
    body = args.literal.strip()
    plain = not ("." in body or body.startswith("…") or body.startswith("..."))
    if plain and args.prec is None:
        parser.error("integer input needs --prec to fix the digit count")
    x = parse_literal(args.literal, args.base, args.prec)
    if args.to == "integer":
        _emit(str(x.to_integer()) + "\n", args.out)
    elif args.to == "dotted":
        _emit(render_dotted(x) + "\n", args.out)
    else:
        _emit(render_tail(x) + "\n", args.out)
    return 0


def _cmd_notebook(args: argparse.Namespace, parser: _Parser) -> int:
    report = run_notebook(args.prec_override)
    text = render_json(report) if args.json else render_text(report)
    _emit(text, args.out)
    return 0 if report.ok else 1


def _cmd_serve(args: argparse.Namespace, parser: _Parser) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _add_common(sub: _Parser, base_default: int, prec_help: str) -> None:
    sub.add_argument("--base", type=int, default=base_default, help="digit base")
    sub.add_argument("--prec", type=int, default=None, help=prec_help)
    sub.add_argument(
        "--format",
        choices=("dotted", "tail"),
        default=None,
        help="output notation; default is dotted above base 10, tail otherwise",
    )
    sub.add_argument("--out", default=None, help="write output to this file")


def build_parser() -> _Parser:
    parser = _Parser(prog="gadic", description=__doc__)
    commands = parser.add_subparsers(dest="command", required=True)

    sqrt = commands.add_parser("sqrt", help="square root of an integer unit")
    sqrt.add_argument("a", type=int, help="the integer to take the root of")
    sqrt.add_argument(
        "--method",
        choices=("hensel", "binomial"),
        default="hensel",
        help="Newton lift from a mod-p seed, or the binomial series",
    )
    sqrt.add_argument("--both", action="store_true", help="print both roots")
    _add_common(sqrt, 11, "digits to compute (default 6)")
    sqrt.set_defaults(handler=_cmd_sqrt)

    hensel = commands.add_parser("hensel", help="all roots of a polynomial")
    hensel.add_argument(
        "poly",
        help='x^5-20x^4-86x^3-98x^2+80x+3 style, or coefficients "3,80,-98,-86,-20,1"',
    )
    _add_common(hensel, 241, "digits to compute (default 3)")
    hensel.set_defaults(handler=_cmd_hensel)

    idem = commands.add_parser("idempotents", help="solutions of x*x = x")
    _add_common(idem, 10, "digits to compute (default 12)")
    idem.set_defaults(handler=_cmd_idempotents)

    periods = commands.add_parser(
        "periods", help="the quadratic periods (-1 +/- sqrt 5)/2"
    )
    _add_common(periods, 11, "digits to compute (default 6)")
    periods.set_defaults(handler=_cmd_periods)

    log = commands.add_parser("log", help="g-adic logarithm, branch log p = 0")
    log.add_argument("x", help="integer, dotted literal, or tail literal")
    _add_common(log, 10, "digits to compute (default 7)")
    log.set_defaults(handler=_cmd_log)

    convert = commands.add_parser("convert", help="translate between notations")
    convert.add_argument("literal", help="integer, dotted literal, or tail literal")
    convert.add_argument("--base", type=int, required=True, help="digit base")
    convert.add_argument(
        "--to", choices=("dotted", "tail", "integer"), required=True
    )
    convert.add_argument(
        "--prec", type=int, default=None, help="digit count for integer input"
    )
    convert.add_argument("--out", default=None, help="write output to this file")
    convert.set_defaults(handler=_cmd_convert)

    notebook = commands.add_parser(
        "notebook", help="recompute the 1800 notebook and report"
    )
    notebook.add_argument(
        "--prec-override",
        type=int,
        default=None,
        help="recompute at this precision or higher; pinned windows still compared",
    )
    notebook.add_argument(
        "--json", action="store_true", help="machine readable, one record per line"
    )
    notebook.add_argument("--out", default=None, help="write output to this file")
    notebook.set_defaults(handler=_cmd_notebook)

    serve = commands.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except GadicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
