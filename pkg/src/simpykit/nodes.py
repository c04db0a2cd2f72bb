"""Syntax tree shared by the Python and SimPy frontends.

Both grammars parse into (and emit from) this one node space, so structural
equality of trees is the equivalence standard for every conversion in the
toolkit.  Nodes are plain dataclasses; a node is either a statement, an
expression, or one of the small clause records (parameters, comprehension
clauses, except handlers, ...) that statements are built from.

Conventions:
 - Every node carries an optional ``span`` (byte offsets into the source it
   was parsed from).  Spans are diagnostics only and never participate in
   equality, dumping, or serialization.
 - Literal nodes keep the raw source slice (``IntLit.raw`` is ``"0x1f"``, not
   31), so emitters can reproduce the original spelling byte for byte.
 - ``StringLit.parts`` holds one raw token per adjacent string literal; two
   or more parts model source-level implicit concatenation.
 - Comments are first-class trivia: ``Comment`` nodes live inside statement
   lists.  ``trailing`` records whether the comment shared a line with the
   statement before it; that flag is layout, not content, and is ignored by
   equality.

Treat all nodes as immutable after construction; nothing in the toolkit
mutates a finished tree, which makes trees safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(slots=True, frozen=True)
class Span:
    """Byte range [start, end) in the originating UTF-8 text."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 0 or self.end < self.start:
            raise ValueError(f"invalid span ({self.start}, {self.end})")


class Node:
    """Base class for every tree node; exists for isinstance checks only."""

    __slots__ = ()


# --- clause records -------------------------------------------------------


@dataclass(slots=True)
class Param(Node):
    name: str
    annotation: object = None  # expression or None
    default: object = None  # expression or None
    span: Span | None = None


@dataclass(slots=True)
class Params(Node):
    """Parameter list of a function or lambda.

    ``pos_only`` come before a ``/`` marker, ``kw_only`` after a ``*`` one.
    A bare ``*`` (keyword-only marker without a name) is the state where
    ``vararg`` is None while ``kw_only`` is non-empty.
    """

    pos_only: list = field(default_factory=list)
    args: list = field(default_factory=list)
    vararg: Param | None = None
    kw_only: list = field(default_factory=list)
    kwarg: Param | None = None
    span: Span | None = None

    def is_empty(self) -> bool:
        return not (self.pos_only or self.args or self.vararg or self.kw_only or self.kwarg)


@dataclass(slots=True)
class Alias(Node):
    """One ``name [as asname]`` entry of an import statement."""

    name: str  # possibly dotted for plain imports
    asname: str | None = None
    span: Span | None = None


@dataclass(slots=True)
class Keyword(Node):
    """Keyword argument in a call; ``name`` of None means ``**value``."""

    name: str | None
    value: object
    span: Span | None = None


@dataclass(slots=True)
class WithItem(Node):
    context: object
    target: object = None  # optional as-target
    span: Span | None = None


@dataclass(slots=True)
class ExceptClause(Node):
    type: object = None
    name: str | None = None
    body: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class ElifClause(Node):
    test: object = None
    body: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class CompClause(Node):
    """One ``for target in iter [if cond]*`` clause of a comprehension."""

    target: object = None
    iter: object = None
    ifs: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class DictItem(Node):
    """Dict display entry; ``key`` of None means ``**value`` unpacking."""

    key: object
    value: object
    span: Span | None = None


@dataclass(slots=True)
class Interp(Node):
    """One ``{expr[!conv][:format]}`` interpolation of an f-string.

    ``format_spec`` is a list of str/Interp pieces (one nesting level) or
    None when absent.
    """

    value: object = None
    conversion: str | None = None
    format_spec: list | None = None
    span: Span | None = None


# --- statements -----------------------------------------------------------


@dataclass(slots=True)
class Module(Node):
    body: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class FunctionDef(Node):
    name: str = ""
    params: Params = field(default_factory=Params)
    returns: object = None
    decorators: list = field(default_factory=list)
    body: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class ClassDef(Node):
    name: str = ""
    bases: list = field(default_factory=list)
    decorators: list = field(default_factory=list)
    body: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class If(Node):
    test: object = None
    body: list = field(default_factory=list)
    elifs: list = field(default_factory=list)  # ElifClause
    orelse: list | None = None
    span: Span | None = None


@dataclass(slots=True)
class While(Node):
    test: object = None
    body: list = field(default_factory=list)
    orelse: list | None = None
    span: Span | None = None


@dataclass(slots=True)
class For(Node):
    target: object = None
    iter: object = None
    body: list = field(default_factory=list)
    orelse: list | None = None
    span: Span | None = None


@dataclass(slots=True)
class With(Node):
    items: list = field(default_factory=list)  # WithItem
    body: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class Try(Node):
    body: list = field(default_factory=list)
    handlers: list = field(default_factory=list)  # ExceptClause
    orelse: list | None = None
    finalbody: list | None = None
    span: Span | None = None


@dataclass(slots=True)
class Import(Node):
    names: list = field(default_factory=list)  # Alias
    span: Span | None = None


@dataclass(slots=True)
class ImportFrom(Node):
    level: int = 0
    module: str | None = None
    names: list = field(default_factory=list)  # Alias; empty + star=True is *
    star: bool = False
    span: Span | None = None


@dataclass(slots=True)
class Return(Node):
    value: object = None
    span: Span | None = None


@dataclass(slots=True)
class Pass(Node):
    span: Span | None = None


@dataclass(slots=True)
class Break(Node):
    span: Span | None = None


@dataclass(slots=True)
class Continue(Node):
    span: Span | None = None


@dataclass(slots=True)
class Raise(Node):
    exc: object = None
    cause: object = None
    span: Span | None = None


@dataclass(slots=True)
class Assert(Node):
    test: object = None
    msg: object = None
    span: Span | None = None


@dataclass(slots=True)
class Assign(Node):
    targets: list = field(default_factory=list)
    value: object = None
    span: Span | None = None


@dataclass(slots=True)
class AugAssign(Node):
    target: object = None
    op: str = "+"
    value: object = None
    span: Span | None = None


@dataclass(slots=True)
class AnnAssign(Node):
    target: object = None
    annotation: object = None
    value: object = None
    span: Span | None = None


@dataclass(slots=True)
class ExprStmt(Node):
    value: object = None
    span: Span | None = None


@dataclass(slots=True)
class Global(Node):
    names: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class Nonlocal(Node):
    names: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class Delete(Node):
    targets: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class Comment(Node):
    text: str = ""  # everything after '#', whitespace included
    trailing: bool = False  # shared a line with the previous statement
    span: Span | None = None


# --- expressions ----------------------------------------------------------


@dataclass(slots=True)
class Name(Node):
    id: str = ""
    span: Span | None = None


@dataclass(slots=True)
class IntLit(Node):
    raw: str = "0"
    span: Span | None = None


@dataclass(slots=True)
class FloatLit(Node):
    raw: str = "0.0"
    span: Span | None = None


@dataclass(slots=True)
class StringLit(Node):
    parts: list = field(default_factory=list)  # raw tokens, quotes included
    span: Span | None = None


@dataclass(slots=True)
class FString(Node):
    raw: str = 'f""'
    parts: list = field(default_factory=list)  # str | Interp
    span: Span | None = None


@dataclass(slots=True)
class BoolLit(Node):
    value: bool = False
    span: Span | None = None


@dataclass(slots=True)
class NoneLit(Node):
    span: Span | None = None


@dataclass(slots=True)
class TupleExpr(Node):
    elts: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class ListExpr(Node):
    elts: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class SetExpr(Node):
    elts: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class DictExpr(Node):
    items: list = field(default_factory=list)  # DictItem
    span: Span | None = None


@dataclass(slots=True)
class ListComp(Node):
    element: object = None
    clauses: list = field(default_factory=list)  # CompClause
    span: Span | None = None


@dataclass(slots=True)
class SetComp(Node):
    element: object = None
    clauses: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class GenExp(Node):
    element: object = None
    clauses: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class DictComp(Node):
    key: object = None
    value: object = None
    clauses: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class BinOp(Node):
    left: object = None
    op: str = "+"
    right: object = None
    span: Span | None = None


@dataclass(slots=True)
class UnaryOp(Node):
    op: str = "-"  # one of -, +, ~, not
    operand: object = None
    span: Span | None = None


@dataclass(slots=True)
class BoolOp(Node):
    op: str = "and"
    values: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class Compare(Node):
    left: object = None
    ops: list = field(default_factory=list)  # operator spellings
    comparators: list = field(default_factory=list)
    span: Span | None = None


@dataclass(slots=True)
class Call(Node):
    func: object = None
    args: list = field(default_factory=list)  # exprs, Starred allowed
    keywords: list = field(default_factory=list)  # Keyword
    span: Span | None = None


@dataclass(slots=True)
class Attribute(Node):
    value: object = None
    attr: str = ""
    span: Span | None = None


@dataclass(slots=True)
class Subscript(Node):
    value: object = None
    index: object = None  # expr, Slice, or tuple thereof
    span: Span | None = None


@dataclass(slots=True)
class Slice(Node):
    lower: object = None
    upper: object = None
    step: object = None
    span: Span | None = None


@dataclass(slots=True)
class Lambda(Node):
    params: Params = field(default_factory=Params)
    body: object = None
    span: Span | None = None


@dataclass(slots=True)
class IfExp(Node):
    body: object = None
    test: object = None
    orelse: object = None
    span: Span | None = None


@dataclass(slots=True)
class Starred(Node):
    value: object = None
    span: Span | None = None


STATEMENT_TYPES = (
    FunctionDef, ClassDef, If, While, For, With, Try, Import, ImportFrom,
    Return, Pass, Break, Continue, Raise, Assert, Assign, AugAssign,
    AnnAssign, ExprStmt, Global, Nonlocal, Delete, Comment,
)

# Registry used by the serializer; every concrete node type, keyed by name.
NODE_TYPES = {
    cls.__name__: cls
    for cls in (
        Param, Params, Alias, Keyword, WithItem, ExceptClause, ElifClause,
        CompClause, DictItem, Interp, Module, FunctionDef, ClassDef, If,
        While, For, With, Try, Import, ImportFrom, Return, Pass, Break,
        Continue, Raise, Assert, Assign, AugAssign, AnnAssign, ExprStmt,
        Global, Nonlocal, Delete, Comment, Name, IntLit, FloatLit, StringLit,
        FString, BoolLit, NoneLit, TupleExpr, ListExpr, SetExpr, DictExpr,
        ListComp, SetComp, GenExp, DictComp, BinOp, UnaryOp, BoolOp, Compare,
        Call, Attribute, Subscript, Slice, Lambda, IfExp, Starred,
    )
}
