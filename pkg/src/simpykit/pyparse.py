"""Recursive-descent parser for the supported Python subset.

Fails fast with ParseError (location + expected set), no recovery.
Out-of-subset constructs (walrus, yield, match, async) are rejected with a
clear message rather than mis-parsed.
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
from .ops import AUG_OPS, BINOP_PREC, P_BITOR, P_TERM
from .pylex import (
    COMMENT, DEDENT, DELIM, EOF, INDENT, KEYWORD, NAME, NEWLINE, NUMBER, OP,
    STRING, PyToken, is_trailing_comment, lex_python,
)

_UNARY = {"-", "+", "~"}
_COMPARE_SIMPLE = {"<", ">", "<=", ">=", "==", "!="}


def parse_python(source: str) -> Module:
    """Parse source text into a Module tree."""
    return _Parser(lex_python(source)).parse_module()


def parse_expression(source: str):
    """Parse a single expression (used for f-string interpolations)."""
    p = _Parser(lex_python(source))
    expr = p._testlist()
    if p.peek().kind != EOF and p.peek().kind != NEWLINE:
        p._fail("unexpected trailing input in expression", p.peek())
    return expr


class _Parser:
    def __init__(self, tokens: list[PyToken]):
        self.toks = tokens
        self.i = 0
        self.pending: list[Comment] = []

    # --- cursor helpers ---------------------------------------------------

    def peek(self, k: int = 0) -> PyToken:
        j = self.i
        seen = 0
        while True:
            t = self.toks[j]
            if t.kind == COMMENT:
                j += 1
                continue
            if seen == k:
                return t
            seen += 1
            j += 1

    def next(self) -> PyToken:
        while True:
            t = self.toks[self.i]
            self.i += 1
            if t.kind == COMMENT:
                self.pending.append(self._comment_node(t, self.i - 1))
                continue
            return t

    def _comment_node(self, t: PyToken, idx: int) -> Comment:
        return Comment(text=t.text[1:], trailing=is_trailing_comment(self.toks, idx), span=t.span)

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.peek()
        return t.kind == kind and (text is None or t.text == text)

    def at_kw(self, word: str) -> bool:
        t = self.peek()
        return t.kind == KEYWORD and t.text == word

    def expect(self, kind: str, text: str | None = None) -> PyToken:
        t = self.peek()
        if t.kind != kind or (text is not None and t.text != text):
            want = text if text is not None else kind
            self._fail(f"expected {want!r}, found {t.text or t.kind!r}", t, {want})
        return self.next()

    def _fail(self, msg: str, tok: PyToken, expected: set | None = None):
        raise ParseError(msg, Span(tok.start, tok.end), frozenset(expected or ()))

    def _flush_comments(self, into: list) -> None:
        into.extend(self.pending)
        self.pending.clear()

    def _take_own_line_comments(self, into: list) -> None:
        while self.toks[self.i].kind == COMMENT:
            into.append(self._comment_node(self.toks[self.i], self.i))
            self.i += 1

    # --- statements ---------------------------------------------------------

    def parse_module(self) -> Module:
        body: list = []
        while True:
            self._take_own_line_comments(body)
            if self.at(EOF):
                break
            self._statement(body)
        return Module(body=body)

    def _suite(self) -> list:
        """Parse the block after a header colon: inline or indented."""
        self.expect(DELIM, ":")
        body: list = []
        if self.at(NEWLINE):
            self.next()
            self.expect(INDENT)
            self._flush_comments(body)
            while True:
                self._take_own_line_comments(body)
                if self.at(DEDENT):
                    break
                self._statement(body)
            self.next()  # DEDENT
        else:
            self._simple_stmt_line(body)
        if not any(not isinstance(s, Comment) for s in body):
            self._fail("suite must contain at least one statement", self.peek())
        return body

    def _statement(self, into: list) -> None:
        t = self.peek()
        if t.kind == KEYWORD:
            word = t.text
            if word in ("def", "class"):
                into.append(self._def_or_class([]))
                self._flush_comments(into)
                return
            if word == "if":
                into.append(self._if_stmt())
                self._flush_comments(into)
                return
            if word == "while":
                into.append(self._while_stmt())
                self._flush_comments(into)
                return
            if word == "for":
                into.append(self._for_stmt())
                self._flush_comments(into)
                return
            if word == "with":
                into.append(self._with_stmt())
                self._flush_comments(into)
                return
            if word == "try":
                into.append(self._try_stmt())
                self._flush_comments(into)
                return
            if word in ("elif", "else", "except", "finally"):
                self._fail(f"{word!r} without matching statement", t)
            if word in ("yield",):
                self._fail("yield is not supported in this subset", t)
        if t.kind == OP and t.text == "@":
            decorators = self._decorators()
            into.append(self._def_or_class(decorators))
            self._flush_comments(into)
            return
        self._simple_stmt_line(into)

    def _simple_stmt_line(self, into: list) -> None:
        while True:
            into.append(self._simple_stmt())
            if self.at(DELIM, ";"):
                self.next()
                if self.at(NEWLINE) or self.at(EOF):
                    break
                continue
            break
        if self.at(NEWLINE):
            self.next()
        elif not self.at(EOF):
            self._fail(f"expected end of statement, found {self.peek().text!r}", self.peek())
        self._flush_comments(into)

    def _simple_stmt(self):
        t = self.peek()
        if t.kind == KEYWORD:
            word = t.text
            if word == "pass":
                self.next()
                return Pass(span=t.span)
            if word == "break":
                self.next()
                return Break(span=t.span)
            if word == "continue":
                self.next()
                return Continue(span=t.span)
            if word == "return":
                self.next()
                value = None if self._at_stmt_end() else self._testlist(allow_starred=True)
                return Return(value=value, span=t.span)
            if word == "raise":
                self.next()
                exc = cause = None
                if not self._at_stmt_end():
                    exc = self._expression()
                    if self.at_kw("from"):
                        self.next()
                        cause = self._expression()
                return Raise(exc=exc, cause=cause, span=t.span)
            if word == "assert":
                self.next()
                test = self._expression()
                msg = None
                if self.at(DELIM, ","):
                    self.next()
                    msg = self._expression()
                return Assert(test=test, msg=msg, span=t.span)
            if word == "del":
                self.next()
                targets = [self._target_from(self._expression())]
                while self.at(DELIM, ","):
                    self.next()
                    if self._at_stmt_end():
                        break
                    targets.append(self._target_from(self._expression()))
                return Delete(targets=targets, span=t.span)
            if word in ("global", "nonlocal"):
                self.next()
                names = [self.expect(NAME).text]
                while self.at(DELIM, ","):
                    self.next()
                    names.append(self.expect(NAME).text)
                cls = Global if word == "global" else Nonlocal
                return cls(names=names, span=t.span)
            if word == "import":
                return self._import_stmt()
            if word == "from":
                return self._from_import_stmt()
            if word not in ("lambda", "not", "None", "True", "False"):
                self._fail(f"unexpected keyword {word!r}", t)
        return self._expr_like_stmt()

    def _at_stmt_end(self) -> bool:
        return self.at(NEWLINE) or self.at(EOF) or self.at(DELIM, ";")

    def _expr_like_stmt(self):
        first = self._testlist(allow_starred=True)
        t = self.peek()
        if t.kind == OP and t.text in AUG_OPS:
            self.next()
            target = self._target_from(first, augmented=True)
            value = self._testlist()
            return AugAssign(target=target, op=t.text[:-1], value=value)
        if t.kind == DELIM and t.text == ":":
            self.next()
            target = self._ann_target_from(first)
            annotation = self._expression()
            value = None
            if self.at(DELIM, "="):
                self.next()
                value = self._testlist()
            return AnnAssign(target=target, annotation=annotation, value=value)
        if t.kind == DELIM and t.text == "=":
            targets = [self._target_from(first)]
            value = None
            while self.at(DELIM, "="):
                self.next()
                nxt = self._testlist(allow_starred=True)
                if self.at(DELIM, "="):
                    targets.append(self._target_from(nxt))
                else:
                    value = nxt
            return Assign(targets=targets, value=value)
        return ExprStmt(value=first)

    def _import_stmt(self):
        t = self.expect(KEYWORD, "import")
        names = [self._dotted_alias()]
        while self.at(DELIM, ","):
            self.next()
            names.append(self._dotted_alias())
        return Import(names=names, span=t.span)

    def _dotted_alias(self) -> Alias:
        parts = [self.expect(NAME).text]
        while self.at(OP, "."):
            self.next()
            parts.append(self.expect(NAME).text)
        asname = None
        if self.at_kw("as"):
            self.next()
            asname = self.expect(NAME).text
        return Alias(name=".".join(parts), asname=asname)

    def _from_import_stmt(self):
        t = self.expect(KEYWORD, "from")
        level = 0
        while True:
            if self.at(OP, "."):
                self.next()
                level += 1
            elif self.at(OP, "..."):
                self.next()
                level += 3
            else:
                break
        module = None
        if self.at(NAME):
            parts = [self.next().text]
            while self.at(OP, "."):
                self.next()
                parts.append(self.expect(NAME).text)
            module = ".".join(parts)
        if level == 0 and module is None:
            self._fail("expected module name after 'from'", self.peek())
        self.expect(KEYWORD, "import")
        if self.at(OP, "*"):
            self.next()
            return ImportFrom(level=level, module=module, names=[], star=True, span=t.span)
        parenthesized = self.at(DELIM, "(")
        if parenthesized:
            self.next()
        names = [self._plain_alias()]
        while self.at(DELIM, ","):
            self.next()
            if parenthesized and self.at(DELIM, ")"):
                break
            names.append(self._plain_alias())
        if parenthesized:
            self.expect(DELIM, ")")
        return ImportFrom(level=level, module=module, names=names, span=t.span)

    def _plain_alias(self) -> Alias:
        name = self.expect(NAME).text
        asname = None
        if self.at_kw("as"):
            self.next()
            asname = self.expect(NAME).text
        return Alias(name=name, asname=asname)

    def _if_stmt(self) -> If:
        t = self.expect(KEYWORD, "if")
        test = self._expression()
        body = self._suite()
        elifs = []
        orelse = None
        while self.at_kw("elif"):
            self.next()
            cond = self._expression()
            elifs.append(ElifClause(test=cond, body=self._suite()))
        if self.at_kw("else"):
            self.next()
            orelse = self._suite()
        return If(test=test, body=body, elifs=elifs, orelse=orelse, span=t.span)

    def _while_stmt(self) -> While:
        t = self.expect(KEYWORD, "while")
        test = self._expression()
        body = self._suite()
        orelse = self._suite() if self._eat_kw("else") else None
        return While(test=test, body=body, orelse=orelse, span=t.span)

    def _for_stmt(self) -> For:
        t = self.expect(KEYWORD, "for")
        target = self._target_from(self._target_list())
        self.expect(KEYWORD, "in")
        it = self._testlist()
        body = self._suite()
        orelse = self._suite() if self._eat_kw("else") else None
        return For(target=target, iter=it, body=body, orelse=orelse, span=t.span)

    def _eat_kw(self, word: str) -> bool:
        if self.at_kw(word):
            self.next()
            return True
        return False

    def _with_stmt(self) -> With:
        t = self.expect(KEYWORD, "with")
        items = [self._with_item()]
        while self.at(DELIM, ","):
            self.next()
            items.append(self._with_item())
        body = self._suite()
        return With(items=items, body=body, span=t.span)

    def _with_item(self) -> WithItem:
        ctx = self._expression()
        target = None
        if self.at_kw("as"):
            self.next()
            target = self._target_from(self._atom_target())
        return WithItem(context=ctx, target=target)

    def _atom_target(self):
        # with as-targets restricted to names or parenthesized name
        # tuples; keeps the space-separated SimPy with-items parseable
        if self.at(DELIM, "("):
            self.next()
            elts = [self._atom_target()]
            saw_comma = False
            while self.at(DELIM, ","):
                saw_comma = True
                self.next()
                if self.at(DELIM, ")"):
                    break
                elts.append(self._atom_target())
            self.expect(DELIM, ")")
            if len(elts) == 1 and not saw_comma:
                return elts[0]
            return TupleExpr(elts=elts)
        tok = self.expect(NAME)
        return Name(id=tok.text, span=tok.span)

    def _try_stmt(self) -> Try:
        t = self.expect(KEYWORD, "try")
        body = self._suite()
        handlers = []
        saw_bare = False
        while self.at_kw("except"):
            self.next()
            if saw_bare:
                self._fail("default 'except' must be last", self.peek())
            typ = None
            name = None
            if not self.at(DELIM, ":"):
                typ = self._expression()
                if self.at_kw("as"):
                    self.next()
                    name = self.expect(NAME).text
            else:
                saw_bare = True
            handlers.append(ExceptClause(type=typ, name=name, body=self._suite()))
        orelse = None
        if self.at_kw("else"):
            if not handlers:
                self._fail("'else' requires at least one 'except'", self.peek())
            self.next()
            orelse = self._suite()
        finalbody = self._suite() if self._eat_kw("finally") else None
        if not handlers and finalbody is None:
            self._fail("'try' needs 'except' or 'finally'", self.peek())
        return Try(body=body, handlers=handlers, orelse=orelse, finalbody=finalbody, span=t.span)

    def _decorators(self) -> list:
        decorators = []
        while self.at(OP, "@"):
            self.next()
            tok = self.expect(NAME)
            expr = Name(id=tok.text, span=tok.span)
            while self.at(OP, "."):
                self.next()
                expr = Attribute(value=expr, attr=self.expect(NAME).text)
            if self.at(DELIM, "("):
                expr = self._call_on(expr)
            decorators.append(expr)
            self.expect(NEWLINE)
            # comments between decorators ride along as pending trivia and
            # get flushed after the decorated statement
            self._take_own_line_comments(self.pending)
            if not (self.at(OP, "@") or self.at_kw("def") or self.at_kw("class")):
                self._fail("expected 'def' or 'class' after decorators", self.peek())
        return decorators

    def _def_or_class(self, decorators: list):
        if self.at_kw("def"):
            t = self.next()
            name = self.expect(NAME).text
            self.expect(DELIM, "(")
            params = self._params(allow_annotations=True, closer=")")
            self.expect(DELIM, ")")
            returns = None
            if self.at(OP, "->"):
                self.next()
                returns = self._expression()
            body = self._suite()
            return FunctionDef(
                name=name, params=params, returns=returns,
                decorators=decorators, body=body, span=t.span,
            )
        t = self.expect(KEYWORD, "class")
        name = self.expect(NAME).text
        bases = []
        if self.at(DELIM, "("):
            self.next()
            while not self.at(DELIM, ")"):
                bases.append(self._expression())
                if self.at(DELIM, "="):
                    self._fail("keyword arguments in class headers are not supported", self.peek())
                if self.at(DELIM, ","):
                    self.next()
                else:
                    break
            self.expect(DELIM, ")")
        body = self._suite()
        return ClassDef(name=name, bases=bases, decorators=decorators, body=body, span=t.span)

    def _params(self, allow_annotations: bool, closer: str) -> Params:
        params = Params()
        stage = "args"  # args -> kwonly
        seen_default = False

        def done() -> bool:
            t = self.peek()
            return t.kind == DELIM and t.text == closer

        while not done():
            t = self.peek()
            if t.kind == OP and t.text == "/":
                self.next()
                if params.pos_only or not params.args or stage != "args":
                    self._fail("misplaced '/' in parameter list", t)
                params.pos_only = params.args
                params.args = []
            elif t.kind == OP and t.text == "*":
                self.next()
                if stage != "args":
                    self._fail("duplicate '*' in parameter list", t)
                stage = "kwonly"
                if not (self.at(DELIM, ",") or done()):
                    params.vararg = self._param(allow_annotations, allow_default=False)
            elif t.kind == OP and t.text == "**":
                self.next()
                params.kwarg = self._param(allow_annotations, allow_default=False)
                if not (self.at(DELIM, ",") or done()):
                    self._fail("'**' parameter must be last", self.peek())
            else:
                p = self._param(allow_annotations, allow_default=True)
                if p.default is None and seen_default and stage == "args":
                    self._fail("parameter without default after one with a default", t)
                if p.default is not None:
                    seen_default = True
                (params.args if stage == "args" else params.kw_only).append(p)
            if self.at(DELIM, ","):
                self.next()
            elif not done():
                self._fail(f"expected ',' or {closer!r} in parameter list", self.peek())
        if params.vararg is None and stage == "kwonly" and not params.kw_only:
            self._fail("named parameters must follow bare '*'", self.peek())
        return params

    def _param(self, allow_annotations: bool, allow_default: bool) -> Param:
        tok = self.expect(NAME)
        annotation = None
        default = None
        if allow_annotations and self.at(DELIM, ":"):
            self.next()
            annotation = self._expression()
        if self.at(DELIM, "="):
            if not allow_default:
                self._fail("default not allowed here", self.peek())
            self.next()
            default = self._expression()
        return Param(name=tok.text, annotation=annotation, default=default, span=tok.span)

    # --- targets ------------------------------------------------------------

    def _target_list(self):
        """Comma-separated assignment targets, stopping before 'in'."""
        first = self._target_atom()
        if not self.at(DELIM, ","):
            return first
        elts = [first]
        while self.at(DELIM, ","):
            self.next()
            if self.at_kw("in") or self.at(DELIM, ":"):
                break
            elts.append(self._target_atom())
        return TupleExpr(elts=elts)

    def _target_atom(self):
        t = self.peek()
        if t.kind == OP and t.text == "*":
            self.next()
            return Starred(value=self._target_atom(), span=t.span)
        if t.kind == DELIM and t.text in ("(", "["):
            closer = ")" if t.text == "(" else "]"
            self.next()
            elts = []
            while not self.at(DELIM, closer):
                elts.append(self._target_atom())
                if self.at(DELIM, ","):
                    self.next()
                else:
                    break
            self.expect(DELIM, closer)
            if closer == "]":
                return ListExpr(elts=elts)
            if len(elts) == 1:
                return elts[0]
            return TupleExpr(elts=elts)
        return self._postfix()

    def _target_from(self, expr, augmented: bool = False):
        ok: bool
        if isinstance(expr, (Name, Attribute, Subscript)):
            ok = True
        elif isinstance(expr, Starred) and not augmented:
            self._target_from(expr.value)
            ok = True
        elif isinstance(expr, (TupleExpr, ListExpr)) and not augmented:
            for e in expr.elts:
                self._target_from(e)
            ok = True
        else:
            ok = False
        if not ok:
            raise ParseError(f"cannot assign to {type(expr).__name__}", getattr(expr, "span", None))
        return expr

    def _ann_target_from(self, expr):
        if isinstance(expr, (Name, Attribute, Subscript)):
            return expr
        raise ParseError("annotated target must be a name, attribute, or subscript", getattr(expr, "span", None))

    # --- expressions ----------------------------------------------------------

    def _testlist(self, allow_starred: bool = False):
        """Comma list; returns a bare expr or an unparenthesized tuple."""
        first = self._expression(allow_starred=allow_starred)
        if not self.at(DELIM, ","):
            return first
        elts = [first]
        while self.at(DELIM, ","):
            self.next()
            if self._testlist_end():
                break
            elts.append(self._expression(allow_starred=allow_starred))
        return TupleExpr(elts=elts)

    def _testlist_end(self) -> bool:
        t = self.peek()
        if t.kind in (NEWLINE, EOF):
            return True
        if t.kind == DELIM and t.text in (")", "]", "}", ":", ";", "="):
            return True
        if t.kind == OP and t.text in AUG_OPS:
            return True
        return t.kind == KEYWORD and t.text in ("in", "if", "for", "else", "as", "from", "import")

    def _expression(self, allow_starred: bool = False):
        if allow_starred and self.at(OP, "*"):
            t = self.next()
            return Starred(value=self._or_test(), span=t.span)
        if self.at_kw("lambda"):
            return self._lambda()
        expr = self._or_test()
        if self.at_kw("if"):
            self.next()
            test = self._or_test()
            self.expect(KEYWORD, "else")
            orelse = self._expression()
            return IfExp(body=expr, test=test, orelse=orelse)
        return expr

    def _lambda(self) -> Lambda:
        t = self.expect(KEYWORD, "lambda")
        params = self._params(allow_annotations=False, closer=":")
        self.expect(DELIM, ":")
        return Lambda(params=params, body=self._expression(), span=t.span)

    def _or_test(self):
        expr = self._and_test()
        if not self.at_kw("or"):
            return expr
        values = [expr]
        while self._eat_kw("or"):
            values.append(self._and_test())
        return BoolOp(op="or", values=values)

    def _and_test(self):
        expr = self._not_test()
        if not self.at_kw("and"):
            return expr
        values = [expr]
        while self._eat_kw("and"):
            values.append(self._not_test())
        return BoolOp(op="and", values=values)

    def _not_test(self):
        if self.at_kw("not"):
            t = self.next()
            return UnaryOp(op="not", operand=self._not_test(), span=t.span)
        return self._comparison()

    def _comparison(self):
        left = self._binary(P_BITOR)
        ops: list[str] = []
        comparators = []
        while True:
            t = self.peek()
            if t.kind == OP and t.text in _COMPARE_SIMPLE:
                self.next()
                ops.append(t.text)
            elif t.kind == KEYWORD and t.text == "in":
                self.next()
                ops.append("in")
            elif t.kind == KEYWORD and t.text == "is":
                self.next()
                if self.at_kw("not"):
                    self.next()
                    ops.append("is not")
                else:
                    ops.append("is")
            elif t.kind == KEYWORD and t.text == "not" and self.peek(1).kind == KEYWORD and self.peek(1).text == "in":
                self.next()
                self.next()
                ops.append("not in")
            else:
                break
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
            if t.kind != OP or BINOP_PREC.get(t.text) != min_prec or t.text == "**":
                return left
            self.next()
            right = self._binary(min_prec + 1)
            left = BinOp(left=left, op=t.text, right=right)

    def _factor(self):
        t = self.peek()
        if t.kind == OP and t.text in _UNARY:
            self.next()
            return UnaryOp(op=t.text, operand=self._factor(), span=t.span)
        return self._power()

    def _power(self):
        left = self._postfix()
        if self.at(OP, "**"):
            self.next()
            return BinOp(left=left, op="**", right=self._factor())
        return left

    def _postfix(self):
        expr = self._atom()
        while True:
            t = self.peek()
            if t.kind == DELIM and t.text == "(":
                expr = self._call_on(expr)
            elif t.kind == DELIM and t.text == "[":
                self.next()
                index = self._subscript_index()
                self.expect(DELIM, "]")
                expr = Subscript(value=expr, index=index)
            elif t.kind == OP and t.text == ".":
                self.next()
                expr = Attribute(value=expr, attr=self.expect(NAME).text)
            else:
                return expr

    def _call_on(self, func) -> Call:
        self.expect(DELIM, "(")
        args: list = []
        keywords: list = []
        if not self.at(DELIM, ")"):
            while True:
                t = self.peek()
                if t.kind == OP and t.text == "*":
                    self.next()
                    args.append(Starred(value=self._expression(), span=t.span))
                elif t.kind == OP and t.text == "**":
                    self.next()
                    keywords.append(Keyword(name=None, value=self._expression()))
                elif t.kind == NAME and self.peek(1).kind == DELIM and self.peek(1).text == "=":
                    name = self.next().text
                    self.next()
                    keywords.append(Keyword(name=name, value=self._expression()))
                else:
                    expr = self._expression()
                    if self.at_kw("for"):
                        if args or keywords:
                            self._fail("generator expression must be the sole argument", self.peek())
                        gen = GenExp(element=expr, clauses=self._comp_clauses())
                        self.expect(DELIM, ")")
                        return Call(func=func, args=[gen], keywords=[])
                    if keywords:
                        self._fail("positional argument after keyword argument", t)
                    args.append(expr)
                if self.at(DELIM, ","):
                    self.next()
                    if self.at(DELIM, ")"):
                        break
                else:
                    break
        self.expect(DELIM, ")")
        return Call(func=func, args=args, keywords=keywords)

    def _subscript_index(self):
        items = [self._slice_item()]
        is_tuple = False
        while self.at(DELIM, ","):
            is_tuple = True
            self.next()
            if self.at(DELIM, "]"):
                break
            items.append(self._slice_item())
        if is_tuple:
            return TupleExpr(elts=items)
        return items[0]

    def _slice_item(self):
        lower = None
        if not self.at(DELIM, ":"):
            expr = self._expression(allow_starred=True)
            if not self.at(DELIM, ":"):
                return expr
            lower = expr
        self.expect(DELIM, ":")
        upper = None
        if not (self.at(DELIM, ":") or self.at(DELIM, "]") or self.at(DELIM, ",")):
            upper = self._expression()
        step = None
        if self.at(DELIM, ":"):
            self.next()
            if not (self.at(DELIM, "]") or self.at(DELIM, ",")):
                step = self._expression()
        return Slice(lower=lower, upper=upper, step=step)

    def _comp_clauses(self) -> list:
        clauses = []
        while self.at_kw("for"):
            self.next()
            target = self._target_from(self._target_list())
            self.expect(KEYWORD, "in")
            it = self._or_test()
            ifs = []
            while self.at_kw("if"):
                self.next()
                ifs.append(self._or_test())
            clauses.append(CompClause(target=target, iter=it, ifs=ifs))
        return clauses

    def _atom(self):
        t = self.peek()
        if t.kind == NAME:
            self.next()
            return Name(id=t.text, span=t.span)
        if t.kind == NUMBER:
            self.next()
            cls = FloatLit if _is_float(t.text) else IntLit
            return cls(raw=t.text, span=t.span)
        if t.kind == STRING:
            return self._strings()
        if t.kind == KEYWORD:
            if t.text == "True":
                self.next()
                return BoolLit(value=True, span=t.span)
            if t.text == "False":
                self.next()
                return BoolLit(value=False, span=t.span)
            if t.text == "None":
                self.next()
                return NoneLit(span=t.span)
            if t.text == "lambda":
                return self._lambda()
            if t.text == "yield":
                self._fail("yield is not supported in this subset", t)
            self._fail(f"unexpected keyword {t.text!r} in expression", t)
        if t.kind == DELIM and t.text == "(":
            return self._paren_atom()
        if t.kind == DELIM and t.text == "[":
            return self._list_atom()
        if t.kind == DELIM and t.text == "{":
            return self._brace_atom()
        if t.kind == OP and t.text == ":=":
            self._fail("the walrus operator is not supported in this subset", t)
        if t.kind == OP and t.text == "...":
            self._fail("'...' is not supported in this subset", t)
        self._fail(f"unexpected {t.text or t.kind!r} in expression", t)

    def _strings(self):
        parts = []
        fstr = False
        while self.at(STRING):
            tok = self.next()
            parts.append(tok.text)
            if is_fstring(tok.text):
                fstr = True
        if fstr:
            if len(parts) > 1:
                raise ParseError(
                    "adjacent concatenation involving f-strings is not supported",
                    Span(self.peek().start, self.peek().end),
                )
            raw = parts[0]
            return FString(raw=raw, parts=parse_fstring_parts(raw))
        return StringLit(parts=parts)

    def _paren_atom(self):
        self.expect(DELIM, "(")
        if self.at(DELIM, ")"):
            self.next()
            return TupleExpr(elts=[])
        first = self._expression(allow_starred=True)
        if self.at_kw("for"):
            gen = GenExp(element=first, clauses=self._comp_clauses())
            self.expect(DELIM, ")")
            return gen
        if self.at(DELIM, ","):
            elts = [first]
            while self.at(DELIM, ","):
                self.next()
                if self.at(DELIM, ")"):
                    break
                elts.append(self._expression(allow_starred=True))
            self.expect(DELIM, ")")
            return TupleExpr(elts=elts)
        self.expect(DELIM, ")")
        return first

    def _list_atom(self):
        self.expect(DELIM, "[")
        if self.at(DELIM, "]"):
            self.next()
            return ListExpr(elts=[])
        first = self._expression(allow_starred=True)
        if self.at_kw("for"):
            comp = ListComp(element=first, clauses=self._comp_clauses())
            self.expect(DELIM, "]")
            return comp
        elts = [first]
        while self.at(DELIM, ","):
            self.next()
            if self.at(DELIM, "]"):
                break
            elts.append(self._expression(allow_starred=True))
        self.expect(DELIM, "]")
        return ListExpr(elts=elts)

    def _brace_atom(self):
        self.expect(DELIM, "{")
        if self.at(DELIM, "}"):
            self.next()
            return DictExpr(items=[])
        if self.at(OP, "**"):
            items = [self._dict_item()]
            while self.at(DELIM, ","):
                self.next()
                if self.at(DELIM, "}"):
                    break
                items.append(self._dict_item())
            self.expect(DELIM, "}")
            return DictExpr(items=items)
        first = self._expression(allow_starred=True)
        if self.at(DELIM, ":"):
            self.next()
            value = self._expression()
            if self.at_kw("for"):
                comp = DictComp(key=first, value=value, clauses=self._comp_clauses())
                self.expect(DELIM, "}")
                return comp
            items = [DictItem(key=first, value=value)]
            while self.at(DELIM, ","):
                self.next()
                if self.at(DELIM, "}"):
                    break
                items.append(self._dict_item())
            self.expect(DELIM, "}")
            return DictExpr(items=items)
        if self.at_kw("for"):
            comp = SetComp(element=first, clauses=self._comp_clauses())
            self.expect(DELIM, "}")
            return comp
        elts = [first]
        while self.at(DELIM, ","):
            self.next()
            if self.at(DELIM, "}"):
                break
            elts.append(self._expression(allow_starred=True))
        self.expect(DELIM, "}")
        return SetExpr(elts=elts)

    def _dict_item(self) -> DictItem:
        if self.at(OP, "**"):
            self.next()
            return DictItem(key=None, value=self._expression())
        key = self._expression()
        self.expect(DELIM, ":")
        return DictItem(key=key, value=self._expression())


def _is_float(raw: str) -> bool:
    lowered = raw.lower()
    if lowered.startswith(("0x", "0o", "0b")):
        return False
    return "." in lowered or "e" in lowered
