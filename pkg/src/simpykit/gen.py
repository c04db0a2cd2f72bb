"""Random tree generation for differential testing, with greedy shrinking.

Trees are valid by construction: suites are non-empty, returns stay inside
functions, loop jumps stay inside loops, with-items after the first start
with a name (the one representational restriction of the space-separated
with form), and starred values appear only where Python allows them.

Identifier and literal pools deliberately include hostile cases: names
like ``ge`` that could fuse with comparison symbols into placeholder
spellings, comment text containing ``<`` and backslashes, mixed quote
styles, and multi-part adjacent string literals.
"""

from __future__ import annotations

import copy
import random

from .fstrings import parse_fstring_parts
from .nodes import (
    AnnAssign, Assert, Assign, Attribute, AugAssign, BinOp, BoolLit, BoolOp,
    Break, Call, ClassDef, Comment, Compare, CompClause, Continue, Delete,
    DictComp, DictExpr, DictItem, ElifClause, ExceptClause, ExprStmt,
    FloatLit, For, FString, FunctionDef, GenExp, Global, If, IfExp, Import,
    ImportFrom, IntLit, Keyword, Lambda, ListComp, ListExpr, Module, Name,
    NoneLit, Param, Params, Pass, Raise, Return, SetComp, SetExpr, Slice, Starred,
    StringLit, Subscript, TupleExpr, Try, UnaryOp, While, With, WithItem,
    Alias,
)

NAMES = (
    "x", "y", "z", "a", "b", "c", "n", "i", "j", "k", "s", "t", "w",
    "acc", "buf", "col", "count", "data", "eq", "flag", "ge", "items",
    "key", "left", "lt", "node", "nums", "obj", "out", "result", "right",
    "row", "text", "tmp", "total", "value",
)
ATTRS = ("append", "count", "data", "items", "name", "next", "size", "value")
INT_RAWS = ("0", "1", "2", "3", "7", "10", "42", "100", "255", "0x1f", "0b101", "0o17", "1_000")
FLOAT_RAWS = ("0.0", "1.5", "2.0", "0.25", "1e3", "2.5e-2", ".5", "10.")
STRING_RAWS = (
    '"a"', "'text'", '"hello world"', "'x=1'", '"\\n"', "'it\\'s'",
    '"tab\\there"', "b'bytes'", 'r"raw\\d+"', '"""doc line"""', "''",
)
COMMENT_TEXTS = (
    " plain note", " see also <line_sep> handling", " trailing", "",
    " path\\to\\file", " a < b and b > c", " TODO later", " unicode: é",
)
BINOPS = ("+", "-", "*", "/", "//", "%", "**", "<<", ">>", "&", "|", "^", "@")
CMPOPS = ("<", ">", "<=", ">=", "==", "!=", "in", "not in", "is", "is not")
AUGOPS = ("+", "-", "*", "/", "//", "%", "**", "&", "|", "^", "<<", ">>")
MODULES = ("os", "sys", "math", "json", "re", "collections", "itertools")


class TreeGenerator:
    """Deterministic random module builder; one RNG stream per seed."""

    def __init__(self, seed: int, max_stmts: int = 6, max_depth: int = 3):
        self.rng = random.Random(seed)
        self.max_stmts = max_stmts
        self.max_depth = max_depth

    def module(self) -> Module:
        body = self.body(self.rng.randint(1, self.max_stmts), in_function=False, in_loop=False, depth=0)
        return Module(body=body)

    # --- statements ---------------------------------------------------------

    def body(self, count: int, in_function: bool, in_loop: bool, depth: int) -> list:
        stmts = [self.stmt(in_function, in_loop, depth) for _ in range(count)]
        if all(isinstance(s, Comment) for s in stmts):
            stmts.append(Pass())
        return _hoist_comments(stmts)

    def block(self, in_function: bool, in_loop: bool, depth: int) -> list:
        return self.body(self.rng.randint(1, 3), in_function, in_loop, depth)

    def stmt(self, in_function: bool, in_loop: bool, depth: int):
        r = self.rng.random()
        if depth < self.max_depth:
            if r < 0.10:
                return self.if_stmt(in_function, in_loop, depth)
            if r < 0.16:
                return self.loop_stmt(in_function, depth)
            if r < 0.21:
                return self.funcdef(depth)
            if r < 0.24:
                return self.try_stmt(in_function, in_loop, depth)
            if r < 0.26:
                return self.with_stmt(in_function, in_loop, depth)
            if r < 0.28 and not in_function:
                return self.classdef(depth)
        return self.simple_stmt(in_function, in_loop)

    def simple_stmt(self, in_function: bool, in_loop: bool = False):
        choices = ["assign", "assign", "assign", "expr", "aug", "ann", "assert", "pass"]
        if in_function:
            choices += ["return", "return", "global"]
        if in_loop:
            choices += ["break", "continue"]
        choices += ["import", "from_import", "del", "raise", "comment"]
        kind = self.rng.choice(choices)
        if kind == "assign":
            if self.rng.random() < 0.12:
                target = self.star_target_tuple()
            elif self.rng.random() < 0.2:
                target = TupleExpr(elts=[self.target_atom(), self.target_atom()])
            else:
                target = self.target_atom()
            value = self.testlist(1)
            if self.rng.random() < 0.08:
                return Assign(targets=[target, self.target_atom()], value=value)
            return Assign(targets=[target], value=value)
        if kind == "expr":
            return ExprStmt(value=self.expr(1))
        if kind == "aug":
            return AugAssign(target=self.target_atom(), op=self.rng.choice(AUGOPS), value=self.expr(1))
        if kind == "ann":
            value = self.expr(1) if self.rng.random() < 0.7 else None
            return AnnAssign(target=Name(id=self.name()), annotation=self.type_expr(), value=value)
        if kind == "assert":
            msg = self.expr(2) if self.rng.random() < 0.3 else None
            return Assert(test=self.expr(1), msg=msg)
        if kind == "pass":
            return Pass()
        if kind == "return":
            if self.rng.random() < 0.2:
                return Return()
            return Return(value=self.testlist(1))
        if kind == "global":
            return Global(names=[self.name() for _ in range(self.rng.randint(1, 2))])
        if kind == "break":
            return Break()
        if kind == "continue":
            return Continue()
        if kind == "import":
            names = []
            for _ in range(self.rng.randint(1, 2)):
                mod = self.rng.choice(MODULES)
                if self.rng.random() < 0.3:
                    mod += "." + self.rng.choice(("path", "util"))
                names.append(Alias(name=mod, asname=self.name() if self.rng.random() < 0.3 else None))
            return Import(names=names)
        if kind == "from_import":
            level = self.rng.choice((0, 0, 0, 1, 2))
            module = self.rng.choice(MODULES) if (level == 0 or self.rng.random() < 0.6) else None
            if self.rng.random() < 0.08:
                return ImportFrom(level=level, module=module or MODULES[0], names=[], star=True)
            names = [
                Alias(name=self.name(), asname=self.name() if self.rng.random() < 0.25 else None)
                for _ in range(self.rng.randint(1, 3))
            ]
            return ImportFrom(level=level, module=module, names=names, star=False)
        if kind == "del":
            return Delete(targets=[self.target_atom() for _ in range(self.rng.randint(1, 2))])
        if kind == "raise":
            if self.rng.random() < 0.25:
                return Raise()
            exc = Call(func=Name(id="ValueError"), args=[self.expr(2)], keywords=[])
            cause = Name(id=self.name()) if self.rng.random() < 0.2 else None
            return Raise(exc=exc, cause=cause)
        return Comment(text=self.rng.choice(COMMENT_TEXTS), trailing=self.rng.random() < 0.4)

    def if_stmt(self, in_function: bool, in_loop: bool, depth: int) -> If:
        elifs = [
            ElifClause(test=self.expr(1), body=self.block(in_function, in_loop, depth + 1))
            for _ in range(self.rng.choice((0, 0, 0, 1, 2)))
        ]
        orelse = self.block(in_function, in_loop, depth + 1) if self.rng.random() < 0.4 else None
        return If(test=self.expr(1), body=self.block(in_function, in_loop, depth + 1), elifs=elifs, orelse=orelse)

    def loop_stmt(self, in_function: bool, depth: int):
        if self.rng.random() < 0.6:
            target = (
                TupleExpr(elts=[Name(id=self.name()), Name(id=self.name())])
                if self.rng.random() < 0.3
                else Name(id=self.name())
            )
            orelse = self.block(in_function, False, depth + 1) if self.rng.random() < 0.15 else None
            return For(
                target=target, iter=self.expr(1),
                body=self.block(in_function, True, depth + 1), orelse=orelse,
            )
        orelse = self.block(in_function, False, depth + 1) if self.rng.random() < 0.15 else None
        return While(test=self.expr(1), body=self.block(in_function, True, depth + 1), orelse=orelse)

    def with_stmt(self, in_function: bool, in_loop: bool, depth: int) -> With:
        items = []
        for _ in range(self.rng.randint(1, 2)):
            ctx = self.postfix_chain()
            target = None
            if self.rng.random() < 0.6:
                if self.rng.random() < 0.15:
                    target = TupleExpr(elts=[Name(id=self.name()), Name(id=self.name())])
                else:
                    target = Name(id=self.name())
            items.append(WithItem(context=ctx, target=target))
        return With(items=items, body=self.block(in_function, in_loop, depth + 1))

    def try_stmt(self, in_function: bool, in_loop: bool, depth: int) -> Try:
        handlers = []
        if self.rng.random() < 0.9:
            for _ in range(self.rng.randint(1, 2)):
                typ = Name(id=self.rng.choice(("ValueError", "KeyError", "OSError")))
                if self.rng.random() < 0.2:
                    typ = TupleExpr(elts=[typ, Name(id="TypeError")])
                name = self.name() if self.rng.random() < 0.4 else None
                handlers.append(ExceptClause(type=typ, name=name, body=self.block(in_function, in_loop, depth + 1)))
            if self.rng.random() < 0.15:
                handlers.append(ExceptClause(type=None, name=None, body=self.block(in_function, in_loop, depth + 1)))
        orelse = (
            self.block(in_function, in_loop, depth + 1)
            if handlers and self.rng.random() < 0.2
            else None
        )
        final = self.block(in_function, in_loop, depth + 1) if (not handlers or self.rng.random() < 0.25) else None
        return Try(body=self.block(in_function, in_loop, depth + 1), handlers=handlers, orelse=orelse, finalbody=final)

    def funcdef(self, depth: int) -> FunctionDef:
        decorators = []
        if self.rng.random() < 0.2:
            deco = Name(id=self.rng.choice(("staticmethod", "cached", "wraps")))
            if self.rng.random() < 0.4:
                deco = Attribute(value=Name(id="functools"), attr="wraps")
            if self.rng.random() < 0.3:
                deco = Call(func=deco, args=[self.expr(3)], keywords=[])
            decorators.append(deco)
        returns = self.type_expr() if self.rng.random() < 0.3 else None
        return FunctionDef(
            name=self.name() + "_fn",
            params=self.params(annotations=True),
            returns=returns,
            decorators=decorators,
            body=self.block(True, False, depth + 1),
        )

    def classdef(self, depth: int) -> ClassDef:
        bases = [Name(id=self.rng.choice(("object", "Exception", "Base")))] if self.rng.random() < 0.5 else []
        body = [self.funcdef(depth + 1) if self.rng.random() < 0.5 else self.simple_stmt(False)]
        if all(isinstance(s, Comment) for s in body):
            body.append(Pass())
        return ClassDef(name="C" + self.name(), bases=bases, decorators=[], body=body)

    def params(self, annotations: bool) -> Params:
        params = Params()
        n_args = self.rng.randint(0, 3)
        defaults_started = False
        for _ in range(n_args):
            p = Param(name=self.name())
            if annotations and self.rng.random() < 0.3:
                p.annotation = self.type_expr()
            if defaults_started or self.rng.random() < 0.3:
                p.default = self.expr(3)
                defaults_started = True
            params.args.append(p)
        if params.args and self.rng.random() < 0.1:
            cut = self.rng.randint(1, len(params.args))
            head, tail = params.args[:cut], params.args[cut:]
            if not any(p.default is not None for p in tail) or all(p.default is not None for p in head):
                params.pos_only, params.args = head, tail
        if self.rng.random() < 0.15:
            params.vararg = Param(name="args")
        kw_count = self.rng.randint(0, 2) if (params.vararg or self.rng.random() < 0.1) else 0
        for _ in range(kw_count):
            p = Param(name=self.name() + "_kw")
            if self.rng.random() < 0.6:
                p.default = self.expr(3)
            params.kw_only.append(p)
        if self.rng.random() < 0.1:
            params.kwarg = Param(name="kwargs")
        return params

    def star_target_tuple(self) -> TupleExpr:
        elts = [Name(id=self.name()), Name(id=self.name())]
        elts[self.rng.randrange(len(elts))] = Starred(value=Name(id=self.name()))
        return TupleExpr(elts=elts)

    def target_atom(self):
        r = self.rng.random()
        if r < 0.6:
            return Name(id=self.name())
        if r < 0.8:
            return Attribute(value=Name(id=self.name()), attr=self.rng.choice(ATTRS))
        return Subscript(value=Name(id=self.name()), index=self.expr(3))

    def type_expr(self):
        base = Name(id=self.rng.choice(("int", "str", "float", "bool", "list", "dict")))
        if self.rng.random() < 0.25:
            return Subscript(value=Name(id=self.rng.choice(("list", "dict", "tuple"))), index=base)
        return base

    # --- expressions ----------------------------------------------------------

    def name(self) -> str:
        return self.rng.choice(NAMES)

    def testlist(self, depth: int):
        if self.rng.random() < 0.12:
            return TupleExpr(elts=[self.expr(depth + 1) for _ in range(self.rng.randint(2, 3))])
        return self.expr(depth)

    def expr(self, depth: int):
        if depth >= self.max_depth + 1:
            return self.atom(depth)
        r = self.rng.random()
        if r < 0.22:
            return BinOp(left=self.expr(depth + 1), op=self.rng.choice(BINOPS), right=self.expr(depth + 1))
        if r < 0.30:
            ops = [self.rng.choice(CMPOPS)]
            comparators = [self.expr(depth + 1)]
            if self.rng.random() < 0.2:
                ops.append(self.rng.choice(CMPOPS))
                comparators.append(self.expr(depth + 1))
            return Compare(left=self.expr(depth + 1), ops=ops, comparators=comparators)
        if r < 0.36:
            op = self.rng.choice(("and", "or"))
            return BoolOp(op=op, values=[self.expr(depth + 1) for _ in range(self.rng.randint(2, 3))])
        if r < 0.42:
            return UnaryOp(op=self.rng.choice(("-", "+", "~", "not")), operand=self.expr(depth + 1))
        if r < 0.52:
            return self.call(depth)
        if r < 0.58:
            return self.collection(depth)
        if r < 0.62:
            return IfExp(body=self.expr(depth + 1), test=self.expr(depth + 1), orelse=self.expr(depth + 1))
        if r < 0.66:
            return self.comprehension(depth)
        if r < 0.69:
            body = self.expr(depth + 1)
            return Lambda(params=self.params(annotations=False), body=body)
        return self.atom(depth)

    def call(self, depth: int) -> Call:
        func = self.postfix_chain()
        args = [self.expr(depth + 1) for _ in range(self.rng.randint(0, 2))]
        keywords = []
        if self.rng.random() < 0.25:
            args.append(Starred(value=Name(id=self.name())))
        if self.rng.random() < 0.25:
            keywords.append(Keyword(name=self.name(), value=self.expr(depth + 1)))
        if self.rng.random() < 0.1:
            keywords.append(Keyword(name=None, value=Name(id=self.name())))
        return Call(func=func, args=args, keywords=keywords)

    def postfix_chain(self):
        expr = Name(id=self.name())
        for _ in range(self.rng.choice((0, 0, 0, 1, 1, 2))):
            if self.rng.random() < 0.6:
                expr = Attribute(value=expr, attr=self.rng.choice(ATTRS))
            else:
                expr = Call(func=expr, args=[], keywords=[])
        return expr

    def collection(self, depth: int):
        r = self.rng.random()
        n = self.rng.randint(0, 3)
        elts = [self.expr(depth + 1) for _ in range(n)]
        if r < 0.35:
            if elts and self.rng.random() < 0.15:
                elts[0] = Starred(value=Name(id=self.name()))
            return ListExpr(elts=elts)
        if r < 0.55:
            return TupleExpr(elts=elts if n != 1 else elts + [self.atom(depth)])
        if r < 0.7 and n:
            return SetExpr(elts=elts)
        items = [DictItem(key=self.atom(depth), value=self.expr(depth + 1)) for _ in range(n)]
        if self.rng.random() < 0.15:
            items.append(DictItem(key=None, value=Name(id=self.name())))
        return DictExpr(items=items)

    def comprehension(self, depth: int):
        clause = CompClause(
            target=Name(id=self.name()),
            iter=self.postfix_chain(),
            ifs=[self.expr(depth + 1)] if self.rng.random() < 0.4 else [],
        )
        element = self.expr(depth + 1)
        r = self.rng.random()
        if r < 0.45:
            return ListComp(element=element, clauses=[clause])
        if r < 0.65:
            return GenExp(element=element, clauses=[clause])
        if r < 0.8:
            return SetComp(element=element, clauses=[clause])
        return DictComp(key=self.atom(depth), value=element, clauses=[clause])

    def atom(self, depth: int):
        r = self.rng.random()
        if r < 0.35:
            return Name(id=self.name())
        if r < 0.5:
            return IntLit(raw=self.rng.choice(INT_RAWS))
        if r < 0.58:
            return FloatLit(raw=self.rng.choice(FLOAT_RAWS))
        if r < 0.72:
            if self.rng.random() < 0.06:
                parts = [self.rng.choice(STRING_RAWS[:6]) for _ in range(2)]
                return StringLit(parts=parts)
            return StringLit(parts=[self.rng.choice(STRING_RAWS)])
        if r < 0.78:
            raw = self.rng.choice(
                (
                    'f"v={x}"',
                    "f'{count!r}'",
                    'f"{total:>10}"',
                    "f'{value:{w}}'",
                    'f"a {node.name} z"',
                )
            )
            return FString(raw=raw, parts=parse_fstring_parts(raw))
        if r < 0.84:
            return BoolLit(value=self.rng.random() < 0.5)
        if r < 0.88:
            return NoneLit()
        if r < 0.94:
            return Attribute(value=Name(id=self.name()), attr=self.rng.choice(ATTRS))
        index = self.expr(depth + 1)
        if self.rng.random() < 0.3:
            index = Slice(
                lower=self.atom(depth) if self.rng.random() < 0.7 else None,
                upper=self.atom(depth) if self.rng.random() < 0.7 else None,
                step=self.atom(depth) if self.rng.random() < 0.3 else None,
            )
        return Subscript(value=Name(id=self.name()), index=index)


_COMPOUND = (FunctionDef, ClassDef, If, While, For, With, Try)


def _hoist_comments(stmts: list) -> list:
    """Move comments that directly follow a compound statement before it.

    A comment line between a dedent and the next statement is read back
    into the still-open block (comment lines never close blocks), so a
    generated tree with the comment outside would not survive the
    emit/parse round trip.  Reordering keeps generated trees in the
    representable set without losing any comment.
    """
    out: list = []
    for s in stmts:
        if isinstance(s, Comment) and out and isinstance(out[-1], _COMPOUND):
            j = len(out)
            while j > 0 and isinstance(out[j - 1], _COMPOUND):
                j -= 1
            out.insert(j, s)
        else:
            out.append(s)
    return out


# --- shrinking ---------------------------------------------------------------


def shrink_tree(tree: Module, still_fails, max_rounds: int = 6) -> Module:
    """Greedy structural shrink: keep any simplification that still fails."""
    best = tree
    for _ in range(max_rounds):
        changed = False
        body = best.body
        i = 0
        while i < len(body):
            if len([s for s in body if not isinstance(s, Comment)]) <= 1:
                break
            candidate = copy.deepcopy(best)
            del candidate.body[i]
            if candidate.body and still_fails(candidate):
                best = candidate
                body = best.body
                changed = True
            else:
                i += 1
        for i, stmt in enumerate(best.body):
            if isinstance(stmt, Pass):
                continue
            candidate = copy.deepcopy(best)
            candidate.body[i] = Pass()
            if still_fails(candidate):
                best = candidate
                changed = True
        if not changed:
            break
    return best
