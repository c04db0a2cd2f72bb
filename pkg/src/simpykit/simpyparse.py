"""Deterministic recursive-descent parser for SimPy.

Dispatch is driven by the grammar token table: each placeholder token
resolves to the Python terminal (and production context) it replaces, so the
parser logic is written against terminals, not placeholder spellings.

The parser is predictive -- no backtracking, lookahead capped at two
tokens.  Both facts are measured, not assumed: every ``peek`` records its
depth in the stats mapping, and there is no rewind operation to call.
Trailing block closers may be omitted at end of input (tolerant reading);
everything else is strict, including doubled statement separators.
"""

from __future__ import annotations

from .errors import ParseError
from .fstrings import is_fstring, parse_fstring_parts
from .nodes import (
    Alias, AnnAssign, Assert, Assign, Attribute, AugAssign, BinOp, BoolLit,
    BoolOp, Break, Call, ClassDef, Comment, Compare, CompClause, Continue,
    Delete, DictComp, DictExpr, DictItem, ElifClause, ExceptClause, ExprStmt,
    FloatLit, For, FString, FunctionDef, GenExp, Global, If, IfExp, Import,
    ImportFrom, IntLit, Keyword, Lambda, ListComp, ListExpr, Module, Name,
    NoneLit, Nonlocal, Param, Params, Pass, Raise, Return, SetComp, SetExpr,
    Slice, Span, Starred, StringLit, Subscript, TupleExpr, Try, UnaryOp,
    While, With, WithItem,
)
from .ops import BINOP_PREC, P_BITOR, P_TERM
from .simpylex import (
    COMMENT_TEXT, EOF, IDENT, NUMBER, PLACEHOLDER, STRING, SYMBOL,
    SimpyToken, lex_simpy,
)
from .simpyemit import unescape_comment_text
from .table import (
    CTX_COMP, CTX_DECORATOR, CTX_DSTAR_PARAM, CTX_ELSE_BLOCK,
    CTX_GLOBAL, CTX_IF_STMT, CTX_IMPORT_FROM, CTX_IMPORT_STAR,
    CTX_KWONLY_MARK, CTX_LAMBDA, CTX_POSONLY_MARK, CTX_RAISE, CTX_STAR_PARAM,
    CTX_STARRED, CTX_TERNARY, CTX_UNPACK, GrammarTokenTable, T_BLOCK_END,
    T_BLOCK_START, T_COMMENT, T_CONCAT, T_IS_NOT, T_LINE_SEP, T_NOT_IN,
    default_table,
)

_SIMPLE_KW = frozenset(
    ("return", "pass", "break", "continue", "raise", "assert", "global", "nonlocal", "del", "import")
)
_UNSUPPORTED = {":=": "the walrus operator", "...": "'...'", "yield": "yield"}


def parse_simpy(source: str, table: GrammarTokenTable | None = None, stats: dict | None = None) -> Module:
    table = table or default_table()
    parser = _SParser(lex_simpy(source, table), table)
    tree = parser.parse_module()
    if stats is not None:
        stats["max_lookahead"] = parser.max_lookahead
        stats["backtracks"] = 0  # the cursor has no rewind operation
    return tree


class _SParser:
    def __init__(self, tokens: list[SimpyToken], table: GrammarTokenTable):
        self.toks = tokens
        self.table = table
        self.i = 0
        self.max_lookahead = 0

    # --- cursor -----------------------------------------------------------

    def peek(self, k: int = 0) -> SimpyToken:
        if k + 1 > self.max_lookahead:
            self.max_lookahead = k + 1
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else self.toks[-1]

    def next(self) -> SimpyToken:
        t = self.toks[self.i]
        if self.i < len(self.toks) - 1:
            self.i += 1
        return t

    def info(self, tok: SimpyToken) -> tuple[str, str] | None:
        """(python terminal, context) a placeholder token stands for."""
        if tok.kind != PLACEHOLDER:
            return None
        entry = self.table.entry_for_placeholder(tok.text)
        if entry is None:
            self._fail(f"unknown placeholder {tok.text}", tok)
        return entry.terminal, entry.context

    def term(self, k: int = 0) -> tuple[str, str] | None:
        return self.info(self.peek(k))

    def at_term(self, terminal: str, context: str | None = None, k: int = 0) -> bool:
        got = self.term(k)
        if got is None:
            return False
        if got[0] != terminal:
            return False
        return context is None or got[1] == context

    def at_sym(self, text: str, k: int = 0) -> bool:
        t = self.peek(k)
        return t.kind == SYMBOL and t.text == text

    def expect_sym(self, text: str) -> SimpyToken:
        t = self.peek()
        if not (t.kind == SYMBOL and t.text == text):
            self._fail(f"expected {text!r}, found {t.text or t.kind!r}", t, {text})
        return self.next()

    def expect_term(self, terminal: str, context: str | None = None) -> SimpyToken:
        if not self.at_term(terminal, context):
            t = self.peek()
            self._fail(f"expected {terminal!r} placeholder, found {t.text or t.kind!r}", t, {terminal})
        return self.next()

    def expect_ident(self) -> SimpyToken:
        t = self.peek()
        if t.kind != IDENT:
            self._fail(f"expected identifier, found {t.text or t.kind!r}", t, {"identifier"})
        return self.next()

    def _fail(self, msg: str, tok: SimpyToken, expected: set | None = None):
        raise ParseError(msg, Span(tok.start, tok.end), frozenset(expected or ()))

    def _is_line_sep(self, k: int = 0) -> bool:
        return self.at_term(T_LINE_SEP, k=k)

    def _is_block_end(self, k: int = 0) -> bool:
        return self.at_term(T_BLOCK_END, k=k)

    # --- statements ---------------------------------------------------------

    def parse_module(self) -> Module:
        body: list = []
        self._statements(body)
        t = self.peek()
        if t.kind != EOF:
            self._fail(f"unexpected {t.text or t.kind!r} at top level", t)
        return Module(body=body)

    def _statements(self, body: list) -> None:
        first = True
        while True:
            t = self.peek()
            if t.kind == EOF or self._is_block_end():
                return
            if self._is_line_sep():
                if first:
                    self._fail("statement separator before any statement", t)
                self.next()
                if self._is_line_sep():
                    self._fail("doubled statement separator", self.peek())
                if self.peek().kind == EOF or self._is_block_end():
                    return
            self._statement(body)
            first = False

    def _block(self) -> list:
        self.expect_term(T_BLOCK_START)
        body: list = []
        self._statements(body)
        if self._is_block_end():
            self.next()
        elif self.peek().kind != EOF:
            self._fail("expected end of block", self.peek())
        if not any(not isinstance(s, Comment) for s in body):
            self._fail("block must contain at least one statement", self.peek())
        return body

    def _statement(self, body: list) -> None:
        t = self.peek()
        got = self.info(t)
        if got is not None:
            terminal, context = got
            if terminal in _UNSUPPORTED:
                self._fail(f"{_UNSUPPORTED[terminal]} is not supported in this subset", t)
            if terminal == "def":
                body.append(self._funcdef([]))
                return
            if terminal == "class":
                body.append(self._classdef([]))
                return
            if terminal == "@" and context == CTX_DECORATOR:
                decorators = self._decorators()
                if self.at_term("def"):
                    body.append(self._funcdef(decorators))
                elif self.at_term("class"):
                    body.append(self._classdef(decorators))
                else:
                    self._fail("expected function or class after decorators", self.peek())
                return
            if terminal == "if" and context == CTX_IF_STMT:
                body.append(self._if_stmt())
                return
            if terminal == "while":
                body.append(self._while_stmt())
                return
            if terminal == "for" and context != CTX_COMP:
                body.append(self._for_stmt())
                return
            if terminal == "with":
                body.append(self._with_stmt())
                return
            if terminal == "try":
                body.append(self._try_stmt())
                return
            if terminal == "from" and context == CTX_IMPORT_FROM:
                body.append(self._from_import())
                return
            if terminal == "COMMENT":
                body.append(self._comment())
                return
            if terminal in _SIMPLE_KW:
                body.append(self._simple_kw_stmt(terminal))
                return
            if terminal in ("elif", "else", "except", "finally"):
                self._fail(f"{terminal!r} without matching statement", t)
        body.append(self._expr_like_stmt())

    def _comment(self) -> Comment:
        self.expect_term(T_COMMENT)
        t = self.peek()
        text = ""
        if t.kind == COMMENT_TEXT:
            text = unescape_comment_text(t.text)
            self.next()
            if self._is_line_sep():
                self.next()
        return Comment(text=text, trailing=False)

    def _simple_kw_stmt(self, terminal: str):
        t = self.next()
        if terminal == "pass":
            return Pass(span=t.span)
        if terminal == "break":
            return Break(span=t.span)
        if terminal == "continue":
            return Continue(span=t.span)
        if terminal == "return":
            if self._at_stmt_end():
                return Return()
            return Return(value=self._testlist(allow_starred=True))
        if terminal == "raise":
            if self._at_stmt_end():
                return Raise()
            exc = self._expression()
            cause = None
            if self.at_term("from", CTX_RAISE):
                self.next()
                cause = self._expression()
            return Raise(exc=exc, cause=cause)
        if terminal == "assert":
            test = self._expression()
            msg = None
            if self.at_sym(","):
                self.next()
                msg = self._expression()
            return Assert(test=test, msg=msg)
        if terminal == "del":
            targets = [self._target_from(self._expression())]
            while self.at_sym(","):
                self.next()
                targets.append(self._target_from(self._expression()))
            return Delete(targets=targets)
        if terminal in ("global", "nonlocal"):
            names = [self.expect_ident().text]
            while self.at_sym(","):
                self.next()
                names.append(self.expect_ident().text)
            return (Global if terminal == "global" else Nonlocal)(names=names)
        if terminal == "import":
            names = [self._dotted_alias()]
            while self.at_sym(","):
                self.next()
                names.append(self._dotted_alias())
            return Import(names=names)
        raise AssertionError(terminal)

    def _at_stmt_end(self) -> bool:
        t = self.peek()
        if t.kind == EOF or self._is_line_sep() or self._is_block_end():
            return True
        got = self.info(t)
        # a statement-initial placeholder also ends the previous statement
        return got is not None and self._starts_statement(got)

    def _starts_statement(self, got: tuple[str, str]) -> bool:
        terminal, context = got
        if terminal in ("def", "class", "while", "with", "try", "elif", "COMMENT") or terminal in _SIMPLE_KW:
            return True
        if terminal == "if" and context == CTX_IF_STMT:
            return True
        if terminal == "for" and context != CTX_COMP:
            return True
        if terminal == "else" and context == CTX_ELSE_BLOCK:
            return True
        if terminal in ("except", "finally"):
            return True
        if terminal == "from" and context == CTX_IMPORT_FROM:
            return True
        if terminal == "@" and context == CTX_DECORATOR:
            return True
        return False

    def _dotted_alias(self) -> Alias:
        parts = [self.expect_ident().text]
        while self.at_sym("."):
            self.next()
            parts.append(self.expect_ident().text)
        asname = None
        if self.at_term("as"):
            self.next()
            asname = self.expect_ident().text
        return Alias(name=".".join(parts), asname=asname)

    def _from_import(self) -> ImportFrom:
        self.expect_term("from", CTX_IMPORT_FROM)
        level = 0
        while self.at_sym("."):
            self.next()
            level += 1
        module = None
        if self.at_term("*", CTX_IMPORT_STAR):
            if level == 0:
                self._fail("relative import level or module required", self.peek())
            self.next()
            return ImportFrom(level=level, module=None, names=[], star=True)
        first = [self.expect_ident().text]
        while self.at_sym("."):
            self.next()
            first.append(self.expect_ident().text)
        d1 = ".".join(first)
        t = self.peek()
        if t.kind == IDENT:
            return ImportFrom(level=level, module=d1, names=self._import_names(), star=False)
        if self.at_term("*", CTX_IMPORT_STAR):
            self.next()
            return ImportFrom(level=level, module=d1, names=[], star=True)
        # d1 was the first imported name, not the module
        if len(first) > 1:
            self._fail("imported names cannot be dotted", t)
        if level == 0:
            self._fail("missing module in import", t)
        alias = Alias(name=d1)
        if self.at_term("as"):
            self.next()
            alias.asname = self.expect_ident().text
        names = [alias]
        while self.at_sym(","):
            self.next()
            names.append(self._plain_alias())
        return ImportFrom(level=level, module=None, names=names, star=False)

    def _import_names(self) -> list:
        names = [self._plain_alias()]
        while self.at_sym(","):
            self.next()
            names.append(self._plain_alias())
        return names

    def _plain_alias(self) -> Alias:
        name = self.expect_ident().text
        asname = None
        if self.at_term("as"):
            self.next()
            asname = self.expect_ident().text
        return Alias(name=name, asname=asname)

    def _decorators(self) -> list:
        decorators = []
        while self.at_term("@", CTX_DECORATOR):
            self.next()
            expr = Name(id=self.expect_ident().text)
            while self.at_sym("."):
                self.next()
                expr = Attribute(value=expr, attr=self.expect_ident().text)
            if self.at_sym("("):
                expr = self._call_on(expr)
            decorators.append(expr)
        return decorators

    def _funcdef(self, decorators: list) -> FunctionDef:
        self.expect_term("def")
        name = self.expect_ident().text
        params = self._params(stop=self._def_params_done)
        returns = None
        if self.at_term("->"):
            self.next()
            returns = self._expression()
        body = self._block()
        return FunctionDef(name=name, params=params, returns=returns, decorators=decorators, body=body)

    def _def_params_done(self) -> bool:
        return self.at_term(T_BLOCK_START) or self.at_term("->")

    def _lambda_params_done(self) -> bool:
        return self.at_term(":", CTX_LAMBDA)

    def _params(self, stop) -> Params:
        params = Params()
        stage = "args"
        while not stop():
            t = self.peek()
            got = self.info(t)
            if got is not None:
                terminal, context = got
                if terminal == "*" and context == CTX_STAR_PARAM:
                    self.next()
                    if stage != "args":
                        self._fail("duplicate '*' parameter", t)
                    stage = "kwonly"
                    params.vararg = self._param()
                    continue
                if terminal == "*" and context == CTX_KWONLY_MARK:
                    self.next()
                    if stage != "args":
                        self._fail("duplicate keyword-only marker", t)
                    stage = "kwonly"
                    continue
                if terminal == "**" and context == CTX_DSTAR_PARAM:
                    self.next()
                    params.kwarg = self._param()
                    if not stop():
                        self._fail("'**' parameter must be last", self.peek())
                    continue
                if terminal == "/" and context == CTX_POSONLY_MARK:
                    self.next()
                    if params.pos_only or not params.args or stage != "args":
                        self._fail("misplaced positional-only marker", t)
                    params.pos_only = params.args
                    params.args = []
                    continue
                self._fail(f"unexpected {t.text} in parameter list", t)
            if t.kind != IDENT:
                self._fail(f"expected parameter name, found {t.text or t.kind!r}", t)
            p = self._param(allow_default=True)
            (params.args if stage == "args" else params.kw_only).append(p)
        return params

    def _param(self, allow_default: bool = False) -> Param:
        name = self.expect_ident().text
        annotation = None
        default = None
        if self.at_sym(":"):
            self.next()
            annotation = self._expression()
        if self.at_sym("="):
            self.next()
            default = self._expression()
            if not allow_default:
                self._fail("default not allowed on this parameter", self.peek())
        return Param(name=name, annotation=annotation, default=default)

    def _classdef(self, decorators: list) -> ClassDef:
        self.expect_term("class")
        name = self.expect_ident().text
        bases = []
        if self.at_sym("("):
            self.next()
            while not self.at_sym(")"):
                bases.append(self._expression())
                if self.at_sym(","):
                    self.next()
                else:
                    break
            self.expect_sym(")")
        return ClassDef(name=name, bases=bases, decorators=decorators, body=self._block())

    def _if_stmt(self) -> If:
        self.expect_term("if", CTX_IF_STMT)
        test = self._expression()
        body = self._block()
        elifs = []
        orelse = None
        while self.at_term("elif"):
            self.next()
            cond = self._expression()
            elifs.append(ElifClause(test=cond, body=self._block()))
        if self.at_term("else", CTX_ELSE_BLOCK):
            self.next()
            orelse = self._block()
        return If(test=test, body=body, elifs=elifs, orelse=orelse)

    def _while_stmt(self) -> While:
        self.expect_term("while")
        test = self._expression()
        body = self._block()
        orelse = None
        if self.at_term("else", CTX_ELSE_BLOCK):
            self.next()
            orelse = self._block()
        return While(test=test, body=body, orelse=orelse)

    def _for_stmt(self) -> For:
        self.expect_term("for")
        target = self._target_from(self._target_list())
        self.expect_term("in")
        it = self._testlist()
        body = self._block()
        orelse = None
        if self.at_term("else", CTX_ELSE_BLOCK):
            self.next()
            orelse = self._block()
        return For(target=target, iter=it, body=body, orelse=orelse)

    def _with_stmt(self) -> With:
        self.expect_term("with")
        items = [self._with_item()]
        while not self.at_term(T_BLOCK_START):
            items.append(self._with_item())
        return With(items=items, body=self._block())

    def _with_item(self) -> WithItem:
        ctx = self._expression()
        target = None
        if self.at_term("as"):
            self.next()
            target = self._target_from(self._as_target())
        return WithItem(context=ctx, target=target)

    def _as_target(self):
        if self.at_sym("("):
            self.next()
            elts = [self._as_target()]
            saw_comma = False
            while self.at_sym(","):
                saw_comma = True
                self.next()
                if self.at_sym(")"):
                    break
                elts.append(self._as_target())
            self.expect_sym(")")
            if len(elts) == 1 and not saw_comma:
                return elts[0]
            return TupleExpr(elts=elts)
        return Name(id=self.expect_ident().text)

    def _try_stmt(self) -> Try:
        self.expect_term("try")
        body = self._block()
        handlers = []
        saw_bare = False
        while self.at_term("except"):
            t = self.next()
            if saw_bare:
                self._fail("default 'except' must be last", t)
            typ = None
            name = None
            if not self.at_term(T_BLOCK_START):
                typ = self._expression()
                if self.at_term("as"):
                    self.next()
                    name = self.expect_ident().text
            else:
                saw_bare = True
            handlers.append(ExceptClause(type=typ, name=name, body=self._block()))
        orelse = None
        if self.at_term("else", CTX_ELSE_BLOCK):
            if not handlers:
                self._fail("'else' requires at least one 'except'", self.peek())
            self.next()
            orelse = self._block()
        finalbody = None
        if self.at_term("finally"):
            self.next()
            finalbody = self._block()
        if not handlers and finalbody is None:
            self._fail("'try' needs 'except' or 'finally'", self.peek())
        return Try(body=body, handlers=handlers, orelse=orelse, finalbody=finalbody)

    def _expr_like_stmt(self):
        first = self._testlist(allow_starred=True)
        t = self.peek()
        got = self.info(t)
        if got is not None and got[0] in _AUG_TERMINALS:
            self.next()
            target = self._target_from(first, augmented=True)
            return AugAssign(target=target, op=got[0][:-1], value=self._testlist())
        if self.at_sym(":"):
            self.next()
            target = self._ann_target_from(first)
            annotation = self._expression()
            value = None
            if self.at_sym("="):
                self.next()
                value = self._testlist()
            return AnnAssign(target=target, annotation=annotation, value=value)
        if self.at_sym("="):
            targets = [self._target_from(first)]
            value = None
            while self.at_sym("="):
                self.next()
                nxt = self._testlist(allow_starred=True)
                if self.at_sym("="):
                    targets.append(self._target_from(nxt))
                else:
                    value = nxt
            return Assign(targets=targets, value=value)
        return ExprStmt(value=first)

    # --- targets ------------------------------------------------------------

    def _target_list(self):
        first = self._target_atom()
        if not self.at_sym(","):
            return first
        elts = [first]
        while self.at_sym(","):
            self.next()
            if self.at_term("in"):
                break
            elts.append(self._target_atom())
        return TupleExpr(elts=elts)

    def _target_atom(self):
        t = self.peek()
        if self.at_term("*", CTX_STARRED):
            self.next()
            return Starred(value=self._target_atom())
        if t.kind == SYMBOL and t.text in ("(", "["):
            closer = ")" if t.text == "(" else "]"
            self.next()
            elts = []
            while not self.at_sym(closer):
                elts.append(self._target_atom())
                if self.at_sym(","):
                    self.next()
                else:
                    break
            self.expect_sym(closer)
            if closer == "]":
                return ListExpr(elts=elts)
            if len(elts) == 1:
                return elts[0]
            return TupleExpr(elts=elts)
        return self._postfix()

    def _target_from(self, expr, augmented: bool = False):
        if isinstance(expr, (Name, Attribute, Subscript)):
            return expr
        if isinstance(expr, Starred) and not augmented:
            self._target_from(expr.value)
            return expr
        if isinstance(expr, (TupleExpr, ListExpr)) and not augmented:
            for e in expr.elts:
                self._target_from(e)
            return expr
        raise ParseError(f"cannot assign to {type(expr).__name__}", getattr(expr, "span", None))

    def _ann_target_from(self, expr):
        if isinstance(expr, (Name, Attribute, Subscript)):
            return expr
        raise ParseError("annotated target must be a name, attribute, or subscript", getattr(expr, "span", None))

    # --- expressions ----------------------------------------------------------

    def _testlist(self, allow_starred: bool = False):
        first = self._expression(allow_starred=allow_starred)
        if not self.at_sym(","):
            return first
        elts = [first]
        while self.at_sym(","):
            self.next()
            if self._testlist_end():
                break
            elts.append(self._expression(allow_starred=allow_starred))
        return TupleExpr(elts=elts)

    def _testlist_end(self) -> bool:
        t = self.peek()
        if t.kind == EOF:
            return True
        if t.kind == SYMBOL and t.text in (")", "]", "}", ":", "="):
            return True
        got = self.info(t)
        if got is None:
            return False
        return got[0] in _AUG_TERMINALS or self._starts_statement(got) or got[0] in (
            "NEWLINE", "DEDENT", "in", "if", "else", "as", "from",
        )

    def _expression(self, allow_starred: bool = False):
        if allow_starred and self.at_term("*", CTX_STARRED):
            self.next()
            return Starred(value=self._or_test())
        if self.at_term("lambda"):
            return self._lambda()
        expr = self._or_test()
        if self.at_term("if", CTX_TERNARY):
            self.next()
            test = self._or_test()
            self.expect_term("else", CTX_TERNARY)
            return IfExp(body=expr, test=test, orelse=self._expression())
        return expr

    def _lambda(self) -> Lambda:
        self.expect_term("lambda")
        params = self._params(stop=self._lambda_params_done)
        self.expect_term(":", CTX_LAMBDA)
        return Lambda(params=params, body=self._expression())

    def _or_test(self):
        expr = self._and_test()
        if not self.at_term("or"):
            return expr
        values = [expr]
        while self.at_term("or"):
            self.next()
            values.append(self._and_test())
        return BoolOp(op="or", values=values)

    def _and_test(self):
        expr = self._not_test()
        if not self.at_term("and"):
            return expr
        values = [expr]
        while self.at_term("and"):
            self.next()
            values.append(self._not_test())
        return BoolOp(op="and", values=values)

    def _not_test(self):
        if self.at_term("not"):
            self.next()
            return UnaryOp(op="not", operand=self._not_test())
        return self._comparison()

    def _comparison(self):
        left = self._binary(P_BITOR)
        ops: list[str] = []
        comparators = []
        while True:
            t = self.peek()
            op = None
            if t.kind == SYMBOL and t.text in ("<", ">"):
                op = t.text
            else:
                got = self.info(t)
                if got is not None:
                    terminal, context = got
                    if terminal in ("<=", ">=", "==", "!="):
                        op = terminal
                    elif terminal == "in" and context == CTX_GLOBAL:
                        op = "in"
                    elif terminal == "is":
                        op = "is"
                    elif terminal == T_NOT_IN:
                        op = "not in"
                    elif terminal == T_IS_NOT:
                        op = "is not"
            if op is None:
                break
            self.next()
            ops.append(op)
            comparators.append(self._binary(P_BITOR))
        if not ops:
            return left
        return Compare(left=left, ops=ops, comparators=comparators)

    def _binary(self, min_prec: int):
        if min_prec > P_TERM:
            return self._factor()
        left = self._binary(min_prec + 1)
        while True:
            t = self.peek()
            op = None
            if t.kind == SYMBOL and BINOP_PREC.get(t.text) == min_prec:
                op = t.text
            else:
                got = self.info(t)
                if got is not None and got[1] == CTX_GLOBAL and BINOP_PREC.get(got[0]) == min_prec and got[0] != "**":
                    op = got[0]
            if op is None:
                return left
            self.next()
            left = BinOp(left=left, op=op, right=self._binary(min_prec + 1))

    def _factor(self):
        t = self.peek()
        if t.kind == SYMBOL and t.text in ("-", "+", "~"):
            self.next()
            return UnaryOp(op=t.text, operand=self._factor())
        return self._power()

    def _power(self):
        left = self._postfix()
        if self.at_term("**", CTX_GLOBAL):
            self.next()
            return BinOp(left=left, op="**", right=self._factor())
        return left

    def _postfix(self):
        expr = self._atom()
        while True:
            t = self.peek()
            if t.kind == SYMBOL and t.text == "(":
                expr = self._call_on(expr)
            elif t.kind == SYMBOL and t.text == "[":
                self.next()
                index = self._subscript_index()
                self.expect_sym("]")
                expr = Subscript(value=expr, index=index)
            elif t.kind == SYMBOL and t.text == ".":
                self.next()
                expr = Attribute(value=expr, attr=self.expect_ident().text)
            else:
                return expr

    def _call_on(self, func) -> Call:
        self.expect_sym("(")
        args: list = []
        keywords: list = []
        if not self.at_sym(")"):
            while True:
                t = self.peek()
                if self.at_term("*", CTX_STARRED):
                    self.next()
                    args.append(Starred(value=self._expression()))
                elif self.at_term("**", CTX_UNPACK):
                    self.next()
                    keywords.append(Keyword(name=None, value=self._expression()))
                elif t.kind == IDENT and self.at_sym("=", k=1):
                    self.next()
                    self.next()
                    keywords.append(Keyword(name=t.text, value=self._expression()))
                else:
                    expr = self._expression()
                    if self.at_term("for", CTX_COMP):
                        if args or keywords:
                            self._fail("generator expression must be the sole argument", self.peek())
                        gen = GenExp(element=expr, clauses=self._comp_clauses())
                        self.expect_sym(")")
                        return Call(func=func, args=[gen], keywords=[])
                    if keywords:
                        self._fail("positional argument after keyword argument", t)
                    args.append(expr)
                if self.at_sym(","):
                    self.next()
                    if self.at_sym(")"):
                        break
                else:
                    break
        self.expect_sym(")")
        return Call(func=func, args=args, keywords=keywords)

    def _subscript_index(self):
        items = [self._slice_item()]
        is_tuple = False
        while self.at_sym(","):
            is_tuple = True
            self.next()
            if self.at_sym("]"):
                break
            items.append(self._slice_item())
        if is_tuple:
            return TupleExpr(elts=items)
        return items[0]

    def _slice_item(self):
        lower = None
        if not self.at_sym(":"):
            expr = self._expression(allow_starred=True)
            if not self.at_sym(":"):
                return expr
            lower = expr
        self.expect_sym(":")
        upper = None
        if not (self.at_sym(":") or self.at_sym("]") or self.at_sym(",")):
            upper = self._expression()
        step = None
        if self.at_sym(":"):
            self.next()
            if not (self.at_sym("]") or self.at_sym(",")):
                step = self._expression()
        return Slice(lower=lower, upper=upper, step=step)

    def _comp_clauses(self) -> list:
        clauses = []
        while self.at_term("for", CTX_COMP):
            self.next()
            target = self._target_from(self._target_list())
            self.expect_term("in")
            it = self._or_test()
            ifs = []
            while self.at_term("if", CTX_COMP):
                self.next()
                ifs.append(self._or_test())
            clauses.append(CompClause(target=target, iter=it, ifs=ifs))
        return clauses

    def _atom(self):
        t = self.peek()
        if t.kind == IDENT:
            self.next()
            return Name(id=t.text, span=t.span)
        if t.kind == NUMBER:
            self.next()
            lowered = t.text.lower()
            is_float = not lowered.startswith(("0x", "0o", "0b")) and ("." in lowered or "e" in lowered)
            return (FloatLit if is_float else IntLit)(raw=t.text, span=t.span)
        if t.kind == STRING:
            return self._strings()
        got = self.info(t)
        if got is not None:
            terminal, context = got
            if terminal == "True":
                self.next()
                return BoolLit(value=True)
            if terminal == "False":
                self.next()
                return BoolLit(value=False)
            if terminal == "None":
                self.next()
                return NoneLit()
            if terminal == "lambda":
                return self._lambda()
            if terminal in _UNSUPPORTED:
                self._fail(f"{_UNSUPPORTED[terminal]} is not supported in this subset", t)
            self._fail(f"unexpected {t.text} in expression", t)
        if t.kind == SYMBOL and t.text == "(":
            return self._paren_atom()
        if t.kind == SYMBOL and t.text == "[":
            return self._list_atom()
        if t.kind == SYMBOL and t.text == "{":
            return self._brace_atom()
        self._fail(f"unexpected {t.text or t.kind!r} in expression", t)

    def _strings(self):
        parts = []
        fstr = False
        while True:
            tok = self.next()
            parts.append(tok.text)
            if is_fstring(tok.text):
                fstr = True
            if self.at_term(T_CONCAT) and self.peek(1).kind == STRING:
                self.next()
                continue
            break
        if fstr:
            if len(parts) > 1:
                self._fail("adjacent concatenation involving f-strings is not supported", self.peek())
            return FString(raw=parts[0], parts=parse_fstring_parts(parts[0]))
        return StringLit(parts=parts)

    def _paren_atom(self):
        self.expect_sym("(")
        if self.at_sym(")"):
            self.next()
            return TupleExpr(elts=[])
        first = self._expression(allow_starred=True)
        if self.at_term("for", CTX_COMP):
            gen = GenExp(element=first, clauses=self._comp_clauses())
            self.expect_sym(")")
            return gen
        if self.at_sym(","):
            elts = [first]
            while self.at_sym(","):
                self.next()
                if self.at_sym(")"):
                    break
                elts.append(self._expression(allow_starred=True))
            self.expect_sym(")")
            return TupleExpr(elts=elts)
        self.expect_sym(")")
        return first

    def _list_atom(self):
        self.expect_sym("[")
        if self.at_sym("]"):
            self.next()
            return ListExpr(elts=[])
        first = self._expression(allow_starred=True)
        if self.at_term("for", CTX_COMP):
            comp = ListComp(element=first, clauses=self._comp_clauses())
            self.expect_sym("]")
            return comp
        elts = [first]
        while self.at_sym(","):
            self.next()
            if self.at_sym("]"):
                break
            elts.append(self._expression(allow_starred=True))
        self.expect_sym("]")
        return ListExpr(elts=elts)

    def _brace_atom(self):
        self.expect_sym("{")
        if self.at_sym("}"):
            self.next()
            return DictExpr(items=[])
        if self.at_term("**", CTX_UNPACK):
            items = [self._dict_item()]
            while self.at_sym(","):
                self.next()
                if self.at_sym("}"):
                    break
                items.append(self._dict_item())
            self.expect_sym("}")
            return DictExpr(items=items)
        first = self._expression(allow_starred=True)
        if self.at_sym(":"):
            self.next()
            value = self._expression()
            if self.at_term("for", CTX_COMP):
                comp = DictComp(key=first, value=value, clauses=self._comp_clauses())
                self.expect_sym("}")
                return comp
            items = [DictItem(key=first, value=value)]
            while self.at_sym(","):
                self.next()
                if self.at_sym("}"):
                    break
                items.append(self._dict_item())
            self.expect_sym("}")
            return DictExpr(items=items)
        if self.at_term("for", CTX_COMP):
            comp = SetComp(element=first, clauses=self._comp_clauses())
            self.expect_sym("}")
            return comp
        elts = [first]
        while self.at_sym(","):
            self.next()
            if self.at_sym("}"):
                break
            elts.append(self._expression(allow_starred=True))
        self.expect_sym("}")
        return SetExpr(elts=elts)

    def _dict_item(self) -> DictItem:
        if self.at_term("**", CTX_UNPACK):
            self.next()
            return DictItem(key=None, value=self._expression())
        key = self._expression()
        self.expect_sym(":")
        return DictItem(key=key, value=self._expression())


_AUG_TERMINALS = frozenset(("+=", "-=", "*=", "/=", "//=", "%=", "**=", "@=", "&=", "|=", "^=", "<<=", ">>="))
