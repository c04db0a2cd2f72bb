"""Operator and precedence metadata shared by both frontends."""

from __future__ import annotations

KEYWORDS = frozenset(
    """False None True and as assert break class continue def del elif else
    except finally for from global if import in is lambda nonlocal not or
    pass raise return try while with yield""".split()
)

# Keywords that head a statement production (used for <kw_stmt> placeholder
# naming and for the line-separator omission rule on the SimPy side).
STATEMENT_KEYWORDS = frozenset(
    """def class if elif else while for with try except finally import from
    return pass break continue raise assert global nonlocal del""".split()
)

AUG_OPS = (
    "+=", "-=", "*=", "/=", "//=", "%=", "**=", "@=",
    "&=", "|=", "^=", "<<=", ">>=",
)

# Multi-character operator/delimiter lexemes, longest first for the lexers.
MULTI_CHAR_OPS = tuple(
    sorted(
        ("**", "//", "<<", ">>", "<=", ">=", "==", "!=", "->", ":=", "...") + AUG_OPS,
        key=len,
        reverse=True,
    )
)

SINGLE_CHAR_OPS = frozenset(".()[]{},=:;+-*/%<>@&|^~")

COMPARE_OPS = frozenset({"<", ">", "<=", ">=", "==", "!=", "in", "not in", "is", "is not"})

# Expression precedence levels, loosest binding first.
P_TUPLE = 0
P_LAMBDA = 1  # lambda and conditional expressions
P_OR = 2
P_AND = 3
P_NOT = 4
P_COMPARE = 5
P_BITOR = 6
P_BITXOR = 7
P_BITAND = 8
P_SHIFT = 9
P_ARITH = 10
P_TERM = 11
P_UNARY = 12
P_POWER = 13
P_POSTFIX = 14
P_ATOM = 15

BINOP_PREC = {
    "|": P_BITOR,
    "^": P_BITXOR,
    "&": P_BITAND,
    "<<": P_SHIFT,
    ">>": P_SHIFT,
    "+": P_ARITH,
    "-": P_ARITH,
    "*": P_TERM,
    "/": P_TERM,
    "//": P_TERM,
    "%": P_TERM,
    "@": P_TERM,
    "**": P_POWER,
}

RIGHT_ASSOC = frozenset({"**"})

BOOLOP_PREC = {"or": P_OR, "and": P_AND}
