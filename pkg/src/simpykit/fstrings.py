"""Parsing of f-string bodies into literal/interpolation parts.

Raw f-string tokens stay the canonical payload (emitters reproduce them byte
for byte); the part structure exists so trees expose interpolation
expressions.  Interpolations nest one level: a format spec may itself
contain ``{...}`` fields, but those fields may not.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .nodes import Interp

_PREFIX_RE = re.compile(r"[rRbBuUfF]*")
_CONVERSIONS = ("r", "s", "a")


def split_string_token(raw: str) -> tuple[str, str, str]:
    """Return (prefix, quote, body) of a raw string token."""
    prefix = _PREFIX_RE.match(raw).group()
    rest = raw[len(prefix) :]
    for quote in ('"""', "'''", '"', "'"):
        if rest.startswith(quote):
            return prefix, quote, rest[len(quote) : -len(quote)]
    raise ParseError(f"malformed string token {raw!r}")


def is_fstring(raw: str) -> bool:
    return "f" in _PREFIX_RE.match(raw).group().lower()


def parse_fstring_parts(raw: str) -> list:
    """Parse a raw f-string token into a list of str and Interp parts."""
    _, _, body = split_string_token(raw)
    return _parse_parts(body, depth=0)


def _parse_parts(text: str, depth: int) -> list:
    parts: list = []
    lit: list[str] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "{":
            if text[i + 1 : i + 2] == "{":
                lit.append("{")
                i += 2
                continue
            if depth >= 2:
                raise ParseError("f-string nesting deeper than one level is not supported")
            if lit:
                parts.append("".join(lit))
                lit = []
            interp, i = _parse_interp(text, i + 1, depth)
            parts.append(interp)
            continue
        if ch == "}":
            if text[i + 1 : i + 2] == "}":
                lit.append("}")
                i += 2
                continue
            raise ParseError("single '}' is not allowed in f-string")
        lit.append(ch)
        i += 1
    if lit:
        parts.append("".join(lit))
    return parts


def _parse_interp(text: str, i: int, depth: int) -> tuple[Interp, int]:
    from .pyparse import parse_expression  # deferred: circular at import time

    start = i
    n = len(text)
    brackets = 0
    in_quote = ""
    expr_end = None
    conversion = None
    while i < n:
        ch = text[i]
        if in_quote:
            if ch == "\\":
                i += 2
                continue
            if text.startswith(in_quote, i):
                i += len(in_quote)
                in_quote = ""
                continue
            i += 1
            continue
        if ch in "\"'":
            in_quote = ch * 3 if text.startswith(ch * 3, i) else ch
            i += len(in_quote)
            continue
        if ch in "([{":
            brackets += 1
        elif ch in ")]}" and brackets > 0:
            brackets -= 1
        elif brackets == 0:
            if ch == "=" and text[i + 1 : i + 2] in ("}", ":") and (i == start or text[i - 1] not in "=!<>"):
                raise ParseError("f-string '=' specifier is not supported")
            if ch == "!" and text[i + 1 : i + 2] in _CONVERSIONS and text[i + 2 : i + 3] in ("}", ":"):
                expr_end = i
                conversion = text[i + 1]
                i += 2
                continue
            if ch == ":":
                if expr_end is None:
                    expr_end = i
                spec, i = _parse_spec(text, i + 1, depth)
                return _finish(text, start, expr_end, conversion, spec, parse_expression), i + 1
            if ch == "}":
                if expr_end is None:
                    expr_end = i
                return _finish(text, start, expr_end, conversion, None, parse_expression), i + 1
        i += 1
    raise ParseError("unterminated interpolation in f-string")


def _parse_spec(text: str, i: int, depth: int) -> tuple[list, int]:
    """Collect a format spec, parsing one nesting level of fields."""
    n = len(text)
    brackets = 0
    j = i
    while j < n:
        ch = text[j]
        if ch == "{":
            if text[j + 1 : j + 2] == "{":
                j += 2
                continue
            brackets += 1
        elif ch == "}":
            if text[j + 1 : j + 2] == "}" and brackets == 0:
                j += 2
                continue
            if brackets == 0:
                return _parse_parts(text[i:j], depth + 1), j
            brackets -= 1
        j += 1
    raise ParseError("unterminated format spec in f-string")


def _finish(text, start, expr_end, conversion, spec, parse_expression) -> Interp:
    expr_text = text[start:expr_end].strip()
    if not expr_text:
        raise ParseError("empty expression in f-string")
    value = parse_expression(expr_text)
    return Interp(value=value, conversion=conversion, format_spec=spec)
