"""Lexer for the supported Python subset.

Produces a flat token stream with synthesized NEWLINE / INDENT / DEDENT
tokens, implicit line joining inside brackets, backslash continuation, and
comments kept as tokens (they are content here, not discardable trivia).

Spans are byte offsets into the source; for ASCII input they coincide with
string indices, otherwise a per-character byte index is built once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import LexError
from .nodes import Span
from .ops import KEYWORDS, MULTI_CHAR_OPS, SINGLE_CHAR_OPS

# Token kinds
KEYWORD = "keyword"
NAME = "identifier"
NUMBER = "number"
STRING = "string"
OP = "operator"
DELIM = "delimiter"
NEWLINE = "NEWLINE"
INDENT = "INDENT"
DEDENT = "DEDENT"
COMMENT = "comment"
EOF = "EOF"

_DELIM_CHARS = frozenset("()[]{},:;=")

STRING_PREFIXES = frozenset(
    p
    for raw in ("", "r", "b", "u", "f", "rb", "br", "fr", "rf")
    for p in {raw, raw.upper(), raw.capitalize(), raw[:1] + raw[1:].upper()}
)

STRING_START_RE = re.compile(r"[rRbBuUfF]{0,2}['\"]")
STRING_RE = re.compile(
    r"[rRbBuUfF]{0,2}"
    r"(?:'''(?:\\.|[^\\])*?'''"
    r'|"""(?:\\.|[^\\])*?"""'
    r"|'(?:\\.|[^\\\n'])*'"
    r'|"(?:\\.|[^\\\n"])*")',
    re.DOTALL,
)

NUMBER_RE = re.compile(
    r"0[xX](?:_?[0-9a-fA-F])+"
    r"|0[oO](?:_?[0-7])+"
    r"|0[bB](?:_?[01])+"
    r"|(?:\d(?:_?\d)*)?\.\d(?:_?\d)*(?:[eE][+-]?\d(?:_?\d)*)?"
    r"|\d(?:_?\d)*\.(?:\d(?:_?\d)*)?(?:[eE][+-]?\d(?:_?\d)*)?"
    r"|\d(?:_?\d)*[eE][+-]?\d(?:_?\d)*"
    r"|\d(?:_?\d)*"
)

IDENT_RE = re.compile(r"[^\W\d]\w*", re.UNICODE)

OPEN_BRACKETS = frozenset("([{")
CLOSE_BRACKETS = frozenset(")]}")


@dataclass(slots=True)
class PyToken:
    kind: str
    text: str
    start: int  # byte offset
    end: int

    @property
    def span(self) -> Span:
        return Span(self.start, self.end)


class _ByteIndex:
    """Maps str offsets to byte offsets; identity for ASCII sources."""

    __slots__ = ("_cum",)

    def __init__(self, source: str):
        if source.isascii():
            self._cum = None
        else:
            cum = [0]
            total = 0
            for ch in source:
                total += len(ch.encode("utf-8"))
                cum.append(total)
            self._cum = cum

    def __call__(self, i: int) -> int:
        return i if self._cum is None else self._cum[i]


def lex_python(source: str) -> list[PyToken]:
    """Tokenize; raises LexError on malformed lexical input."""
    if source.startswith("﻿"):
        source = source[1:]
    bix = _ByteIndex(source)
    toks: list[PyToken] = []
    n = len(source)
    i = 0
    depth = 0
    indents = [0]
    line_has_token = False  # any token on the current physical line
    logical_open = False  # a logical line has produced tokens
    at_line_start = True

    def add(kind: str, text: str, a: int, b: int) -> None:
        toks.append(PyToken(kind, text, bix(a), bix(b)))

    def err(msg: str, a: int) -> LexError:
        return LexError(msg, Span(bix(a), bix(min(a + 1, n))))

    while i < n:
        if at_line_start and depth == 0:
            # measure indentation; blank and comment-only lines do not count
            col = 0
            j = i
            while j < n and source[j] in " \t\f":
                if source[j] == "\t":
                    col = (col // 8 + 1) * 8
                elif source[j] == " ":
                    col += 1
                j += 1
            if j >= n:
                break
            ch = source[j]
            if ch in "\r\n":
                i = j + (2 if source[j : j + 2] == "\r\n" else 1)
                continue
            if ch == "#":
                k = j
                while k < n and source[k] not in "\r\n":
                    k += 1
                add(COMMENT, source[j:k], j, k)
                i = k + (2 if source[k : k + 2] == "\r\n" else 1 if k < n else 0)
                continue
            if col > indents[-1]:
                indents.append(col)
                add(INDENT, "", j, j)
            else:
                while col < indents[-1]:
                    indents.pop()
                    add(DEDENT, "", j, j)
                if col != indents[-1]:
                    raise err("inconsistent dedent", j)
            i = j
            at_line_start = False
            line_has_token = False
            continue

        ch = source[i]
        if ch in " \t\f":
            i += 1
            continue
        if ch == "\\":
            nxt = source[i + 1 : i + 3]
            if nxt.startswith("\r\n"):
                i += 3
            elif nxt[:1] in ("\n", "\r"):
                i += 2
            else:
                raise err("unexpected character after line continuation", i)
            line_has_token = False
            continue
        if ch in "\r\n":
            step = 2 if source[i : i + 2] == "\r\n" else 1
            if depth == 0:
                if logical_open:
                    add(NEWLINE, "", i, i)
                    logical_open = False
                at_line_start = True
            i += step
            line_has_token = False
            continue
        if ch == "#":
            k = i
            while k < n and source[k] not in "\r\n":
                k += 1
            add(COMMENT, source[i:k], i, k)
            i = k
            continue

        at_line_start = False
        m = STRING_START_RE.match(source, i)
        if m:
            sm = STRING_RE.match(source, i)
            if not sm:
                raise err("unterminated string literal", i)
            prefix = re.match(r"[rRbBuUfF]*", sm.group()).group()
            if prefix not in STRING_PREFIXES:
                raise err(f"invalid string prefix {prefix!r}", i)
            add(STRING, sm.group(), i, sm.end())
            i = sm.end()
            line_has_token = True
            logical_open = True
            continue
        if ch.isdigit() or (ch == "." and source[i + 1 : i + 2].isdigit()):
            m = NUMBER_RE.match(source, i)
            assert m
            if source[m.end() : m.end() + 1] in ("j", "J"):
                raise err("imaginary literals are not supported", i)
            add(NUMBER, m.group(), i, m.end())
            i = m.end()
            line_has_token = True
            logical_open = True
            continue
        m = IDENT_RE.match(source, i)
        if m:
            word = m.group()
            add(KEYWORD if word in KEYWORDS else NAME, word, i, m.end())
            i = m.end()
            line_has_token = True
            logical_open = True
            continue
        for op in MULTI_CHAR_OPS:
            if source.startswith(op, i):
                add(OP, op, i, i + len(op))
                i += len(op)
                break
        else:
            if ch in SINGLE_CHAR_OPS:
                if ch in OPEN_BRACKETS:
                    depth += 1
                elif ch in CLOSE_BRACKETS:
                    depth = max(0, depth - 1)
                add(DELIM if ch in _DELIM_CHARS else OP, ch, i, i + 1)
                i += 1
            else:
                raise err(f"illegal character {ch!r}", i)
        line_has_token = True
        logical_open = True

    end = bix(n)
    if logical_open:
        toks.append(PyToken(NEWLINE, "", end, end))
    while len(indents) > 1:
        indents.pop()
        toks.append(PyToken(DEDENT, "", end, end))
    toks.append(PyToken(EOF, "", end, end))
    return toks


def is_trailing_comment(tokens: list[PyToken], idx: int) -> bool:
    """True when the comment token at idx follows code on its line.

    Own-line comments are preceded (in the token stream) by nothing, a
    NEWLINE, INDENT, or DEDENT; anything else means code came first.
    """
    for j in range(idx - 1, -1, -1):
        k = tokens[j].kind
        if k in (NEWLINE, INDENT, DEDENT):
            return False
        if k == COMMENT:
            continue
        return True
    return False
