"""Reading and writing digit expansions as text.

Two notations are supported.  Dotted notation separates digits with
periods and works in any base: "160.191.2" is the three-digit base-241
value with lowest digit 2.  Tail notation is the familiar unseparated
digit string for bases up to 10, always written with a leading ellipsis:
"...425781249".  Both are most significant digit first, matching how the
digits are written by hand.

These strings are the wire format for the command line and for golden
files.  A golden file is UTF-8 text with a "base=" header line followed
by one literal per line.
"""
from __future__ import annotations

import re

from .digits import DigitExpansion, check_base
from .errors import ParseError

ELLIPSIS = "…"

_TOKEN_RE = re.compile(r"^[0-9]{1,3}$")


def _strip_ellipsis(text: str) -> str:
    if text.startswith(ELLIPSIS):
        return text[1:]
    if text.startswith("..."):
        return text[3:]
    return text


def parse_dotted(text: str, base: int) -> DigitExpansion:
    """Parse dotted notation; a leading ellipsis is accepted and ignored."""
    check_base(base)
    body = _strip_ellipsis(text.strip())
    if not body:
        raise ParseError(f"no digits in dotted literal {text!r}")
    tokens = body.split(".")
    digits = []
    for tok in tokens:
        if not _TOKEN_RE.match(tok):
            raise ParseError(f"bad digit token {tok!r} in {text!r}")
        d = int(tok)
        if d >= base:
            raise ParseError(f"digit {d} is not below base {base}")
        digits.append(d)
    digits.reverse()
    return DigitExpansion(base, tuple(digits))


def render_dotted(x: DigitExpansion) -> str:
    """Write dotted notation, most significant digit first, no ellipsis."""
    return ".".join(str(d) for d in reversed(x.digits))


def parse_tail(text: str, base: int) -> DigitExpansion:
    """Parse an unseparated digit string (base at most 10).

    The leading ellipsis is optional on input even though render_tail
    always writes one.
    """
    check_base(base)
    if base > 10:
        raise ParseError(f"tail notation needs single-character digits, base {base} is too big")
    body = _strip_ellipsis(text.strip())
    if not body:
        raise ParseError(f"no digits in tail literal {text!r}")
    digits = []
    for ch in body:
        if not ch.isdigit() or not ch.isascii():
            raise ParseError(f"bad character {ch!r} in tail literal {text!r}")
        d = int(ch)
        if d >= base:
            raise ParseError(f"digit {d} is not below base {base}")
        digits.append(d)
    digits.reverse()
    return DigitExpansion(base, tuple(digits))


def render_tail(x: DigitExpansion) -> str:
    """Write tail notation with its leading ellipsis (base at most 10)."""
    if x.base > 10:
        raise ParseError(f"tail notation needs single-character digits, base {x.base} is too big")
    return ELLIPSIS + "".join(str(d) for d in reversed(x.digits))


def parse_literal(text: str, base: int, precision: int | None = None) -> DigitExpansion:
    """Parse whichever notation ``text`` is written in.

    Dotted if it contains a period, tail if it starts with an ellipsis,
    and otherwise a plain integer, which needs an explicit precision to
    say how many digits to keep.
    """
    stripped = text.strip()
    if "." in _strip_ellipsis(stripped):
        return parse_dotted(stripped, base)
    if stripped.startswith(ELLIPSIS) or stripped.startswith("..."):
        return parse_tail(stripped, base)
    try:
        n = int(stripped, 10)
    except ValueError:
        raise ParseError(f"cannot read {text!r} as an integer or literal") from None
    if precision is None:
        raise ParseError(f"integer input {text!r} needs an explicit precision")
    return DigitExpansion.from_integer(n, base, precision)


def render_default(x: DigitExpansion) -> str:
    """Dotted for bases above 10, tail otherwise."""
    return render_dotted(x) if x.base > 10 else render_tail(x)


def read_literal_file(text: str) -> tuple[int, list[DigitExpansion]]:
    """Parse golden-file content: a base= header, then one literal per line."""
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines or not lines[0].startswith("base="):
        raise ParseError("golden file must start with a base= header line")
    try:
        base = int(lines[0][len("base="):])
    except ValueError:
        raise ParseError(f"bad base header {lines[0]!r}") from None
    check_base(base)
    out = []
    for line in lines[1:]:
        if "." in _strip_ellipsis(line):
            out.append(parse_dotted(line, base))
        else:
            out.append(parse_tail(line, base))
    return base, out
