"""Lexer for SimPy source: one logical line, placeholder-driven.

Longest-match scanning; placeholder literals come from the grammar token
table, so only spellings the table defines are recognized as placeholders
(a ``<`` that opens no known placeholder is the comparison symbol).
Whitespace separates tokens and is otherwise discarded; newlines are only
legal inside string literals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LexError
from .nodes import Span
from .pylex import IDENT_RE, NUMBER_RE, STRING_PREFIXES, STRING_RE, STRING_START_RE, _ByteIndex
from .table import (
    CTX_COMMENT, CTX_SIMPLE_STMTS, GrammarTokenTable, T_COMMENT, T_LINE_SEP,
    default_table,
)

PLACEHOLDER = "placeholder"
IDENT = "identifier"
NUMBER = "number"
STRING = "string"
SYMBOL = "retained-symbol"
COMMENT_TEXT = "comment-text"
EOF = "EOF"

_SYMBOLS = frozenset(".()[]{},=:+-*/%<>@&|^~")


@dataclass(slots=True)
class SimpyToken:
    kind: str
    text: str
    start: int
    end: int

    @property
    def span(self) -> Span:
        return Span(self.start, self.end)


def lex_simpy(source: str, table: GrammarTokenTable | None = None) -> list[SimpyToken]:
    table = table or default_table()
    ph_pattern = table.placeholder_pattern()
    comment_ph = table.token(T_COMMENT, CTX_COMMENT)
    line_sep_ph = table.token(T_LINE_SEP, CTX_SIMPLE_STMTS)
    bix = _ByteIndex(source)
    toks: list[SimpyToken] = []
    i = 0
    n = len(source)

    def add(kind: str, text: str, a: int, b: int) -> None:
        toks.append(SimpyToken(kind, text, bix(a), bix(b)))

    while i < n:
        ch = source[i]
        if ch in " \t":
            i += 1
            continue
        if ch in "\r\n":
            raise LexError("newline outside a string literal", Span(bix(i), bix(i + 1)))
        if ch == "<":
            m = ph_pattern.match(source, i)
            if m:
                add(PLACEHOLDER, m.group(), i, m.end())
                i = m.end()
                if m.group() == comment_ph:
                    i = _scan_comment(source, i, line_sep_ph, add, bix)
                continue
            add(SYMBOL, "<", i, i + 1)
            i += 1
            continue
        m = STRING_START_RE.match(source, i)
        if m:
            sm = STRING_RE.match(source, i)
            if not sm:
                raise LexError("unterminated string literal", Span(bix(i), bix(i + 1)))
            prefix = re.match(r"[rRbBuUfF]*", sm.group()).group()
            if prefix not in STRING_PREFIXES:
                raise LexError(f"invalid string prefix {prefix!r}", Span(bix(i), bix(i + 1)))
            add(STRING, sm.group(), i, sm.end())
            i = sm.end()
            continue
        if ch.isdigit() or (ch == "." and source[i + 1 : i + 2].isdigit()):
            m = NUMBER_RE.match(source, i)
            if source[m.end() : m.end() + 1] in ("j", "J"):
                raise LexError("imaginary literals are not supported", Span(bix(i), bix(i + 1)))
            add(NUMBER, m.group(), i, m.end())
            i = m.end()
            continue
        m = IDENT_RE.match(source, i)
        if m:
            add(IDENT, m.group(), i, m.end())
            i = m.end()
            continue
        if ch in _SYMBOLS:
            add(SYMBOL, ch, i, i + 1)
            i += 1
            continue
        raise LexError(f"no rule matches {ch!r}", Span(bix(i), bix(i + 1)))

    toks.append(SimpyToken(EOF, "", bix(n), bix(n)))
    return toks


def _scan_comment(source: str, i: int, line_sep_ph: str | None, add, bix) -> int:
    """Collect escaped comment text up to its line separator terminator."""
    start = i
    out: list[str] = []
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\\" and i + 1 < n:
            # keep the escape sequence; the parser decodes comment text
            out.append(source[i : i + 2])
            i += 2
            continue
        if ch == "<":
            if line_sep_ph is not None and source.startswith(line_sep_ph, i):
                add(COMMENT_TEXT, "".join(out), start, i)
                add(PLACEHOLDER, line_sep_ph, i, i + len(line_sep_ph))
                return i + len(line_sep_ph)
            raise LexError("unescaped '<' in comment text", Span(bix(i), bix(i + 1)))
        if ch in "\r\n":
            raise LexError("newline inside comment text", Span(bix(i), bix(i + 1)))
        out.append(ch)
        i += 1
    add(COMMENT_TEXT, "".join(out), start, i)
    return i
