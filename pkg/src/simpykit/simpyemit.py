"""SimPy emitter: canonical single-line rendering of a tree.

Output contains no newlines or indentation (strings and comment payloads
aside).  Statement separators follow the optional-separator rule: a
``line_sep`` token appears between consecutive simple statements and is
omitted wherever the next statement opens with a placeholder, and before
block ends and end of input.  Whitespace is inserted only where two
adjacent lexemes would otherwise fuse into one token.

Every terminal rendering is resolved through the grammar token table, so a
renamed roster changes the emitted bytes without touching this module.
"""

from __future__ import annotations

from .errors import EmitError
from .nodes import (
    AnnAssign, Assert, Assign, Attribute, AugAssign, BinOp, BoolLit, BoolOp,
    Break, Call, ClassDef, Comment, Compare, Continue, Delete, DictComp,
    DictExpr, DictItem, ExprStmt, FloatLit, For, FString, FunctionDef,
    GenExp, Global, If, IfExp, Import, ImportFrom, IntLit, Lambda, ListComp,
    ListExpr, Module, Name, NoneLit, Nonlocal, Param, Params, Pass, Raise,
    Return, SetComp, SetExpr, Slice, Starred, StringLit, Subscript,
    TupleExpr, Try, UnaryOp, While, With,
)
from .ops import (
    BINOP_PREC, BOOLOP_PREC, P_ATOM, P_BITOR, P_COMPARE, P_LAMBDA, P_NOT,
    P_OR, P_POSTFIX, P_POWER, P_TUPLE, P_UNARY,
)
from .table import (
    CTX_BLOCK, CTX_COMMENT, CTX_COMP, CTX_COMPARISON, CTX_DECORATOR,
    CTX_DSTAR_PARAM, CTX_ELSE_BLOCK, CTX_FOR_STMT, CTX_IF_STMT,
    CTX_IMPORT_FROM, CTX_IMPORT_STAR, CTX_KWONLY_MARK, CTX_LAMBDA,
    CTX_POSONLY_MARK, CTX_RAISE, CTX_SIMPLE_STMTS, CTX_STAR_PARAM,
    CTX_STARRED, CTX_STRING_CONCAT, CTX_TERNARY, CTX_UNPACK,
    GrammarTokenTable, T_BLOCK_END, T_BLOCK_START, T_COMMENT, T_CONCAT,
    T_IS_NOT, T_LINE_SEP, T_NOT_IN, default_table,
)

# lexeme kinds used by the separator logic
_PH = "ph"
_NAME = "name"
_NUM = "num"
_STR = "str"
_SYM = "sym"
_TEXT = "text"

def emit_simpy(tree: Module, table: GrammarTokenTable | None = None) -> str:
    if not isinstance(tree, Module):
        raise EmitError(f"expected a Module, got {type(tree).__name__}")
    emitter = _Emitter(table or default_table())
    emitter.body(tree.body, top=True)
    return emitter.render()


def escape_comment_text(text: str) -> str:
    return text.replace("\\", "\\\\").replace("<", "\\<")


def unescape_comment_text(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        if text[i] == "\\" and i + 1 < len(text):
            out.append(text[i + 1])
            i += 2
        else:
            out.append(text[i])
            i += 1
    return "".join(out)


class _Emitter:
    def __init__(self, table: GrammarTokenTable):
        self.table = table
        self.lexemes: list[tuple[str, str]] = []
        self.placeholders = frozenset(table.placeholders)
        t = table.require_token
        self.kw = {
            w: t(w)
            for w in (
                "def", "class", "elif", "while", "with", "try", "except",
                "finally", "import", "return", "pass", "break", "continue",
                "raise", "assert", "global", "nonlocal", "del", "True",
                "False", "None", "and", "or", "not", "in", "is", "as",
                "lambda",
            )
        }
        self.kw["if"] = t("if", CTX_IF_STMT)
        self.kw["for"] = t("for", CTX_FOR_STMT)
        self.kw["else"] = t("else", CTX_ELSE_BLOCK)
        self.kw["from_import"] = t("from", CTX_IMPORT_FROM)
        self.kw["raise_from"] = t("from", CTX_RAISE)
        self.ternary_if = t("if", CTX_TERNARY)
        self.ternary_else = t("else", CTX_TERNARY)
        self.comp_for = t("for", CTX_COMP)
        self.comp_if = t("if", CTX_COMP)
        self.not_in = t(T_NOT_IN, CTX_COMPARISON)
        self.is_not = t(T_IS_NOT, CTX_COMPARISON)
        self.block_start = t(T_BLOCK_START, CTX_BLOCK)
        self.block_end = t(T_BLOCK_END, CTX_BLOCK)
        self.line_sep = t(T_LINE_SEP, CTX_SIMPLE_STMTS)
        self.concat = t(T_CONCAT, CTX_STRING_CONCAT)
        self.comment = t(T_COMMENT, CTX_COMMENT)
        self.vararg = t("*", CTX_STAR_PARAM)
        self.kwonly = t("*", CTX_KWONLY_MARK)
        self.kwarg = t("**", CTX_DSTAR_PARAM)
        self.posonly = t("/", CTX_POSONLY_MARK)
        self.star = t("*", CTX_STARRED)
        self.dstar = t("**", CTX_UNPACK)
        self.decorator = t("@", CTX_DECORATOR)
        self.import_star = t("*", CTX_IMPORT_STAR)
        self.lambda_body = t(":", CTX_LAMBDA)
        self.binop = {op: (t(op) if len(op) > 1 else op) for op in BINOP_PREC}
        self.cmpop = {
            "<": "<", ">": ">",
            "<=": t("<="), ">=": t(">="), "==": t("=="), "!=": t("!="),
            "in": self.kw["in"], "is": self.kw["is"],
            "not in": self.not_in, "is not": self.is_not,
        }
        self.augop = {op[:-1]: t(op) for op in ("+=", "-=", "*=", "/=", "//=", "%=", "**=", "@=", "&=", "|=", "^=", "<<=", ">>=")}
        self.arrow = t("->")

    # --- lexeme plumbing --------------------------------------------------

    def ph(self, text: str) -> None:
        self.lexemes.append((text, _PH))

    def sym(self, text: str) -> None:
        self.lexemes.append((text, _SYM))

    def name(self, text: str) -> None:
        self.lexemes.append((text, _NAME))

    def emit_op(self, text: str) -> None:
        self.lexemes.append((text, _PH if text.startswith("<") else _SYM))

    def render(self) -> str:
        out: list[str] = []
        lex = self.lexemes
        for i, (text, kind) in enumerate(lex):
            if out and self._needs_sep(lex[i - 1], (text, kind), lex[i + 1] if i + 1 < len(lex) else None):
                out.append(" ")
            out.append(text)
        return "".join(out)

    def _needs_sep(self, prev, cur, nxt) -> bool:
        ptext, pkind = prev
        ctext, ckind = cur
        if pkind in (_NAME, _NUM) and ckind in (_NAME, _NUM, _STR):
            return True
        # avoid fabricating a placeholder out of `<`, a name, and `>`
        if (
            pkind == _SYM
            and ptext == "<"
            and ckind == _NAME
            and nxt is not None
            and nxt[0] == ">"
            and f"<{ctext}>" in self.placeholders
        ):
            return True
        return False

    # --- statements ---------------------------------------------------------

    def body(self, stmts: list, top: bool = False) -> None:
        sep_pending = False
        for stmt in stmts:
            first_ph = self._opens_with_placeholder(stmt)
            if sep_pending and not first_ph:
                self.ph(self.line_sep)
            self.stmt(stmt)
            sep_pending = self._needs_separator_after(stmt)

    def _opens_with_placeholder(self, stmt) -> bool:
        return not isinstance(stmt, (Assign, AugAssign, AnnAssign, ExprStmt))

    def _needs_separator_after(self, stmt) -> bool:
        if isinstance(stmt, Comment):
            return False  # comments carry their own terminator
        return not isinstance(
            stmt, (FunctionDef, ClassDef, If, While, For, With, Try)
        )

    def block(self, stmts: list) -> None:
        self.ph(self.block_start)
        self.body(stmts)
        self.ph(self.block_end)

    def stmt(self, stmt) -> None:
        if isinstance(stmt, Comment):
            self.ph(self.comment)
            self.lexemes.append((escape_comment_text(stmt.text), _TEXT))
            self.ph(self.line_sep)
            return
        if isinstance(stmt, ExprStmt):
            self.testlist(stmt.value)
            return
        if isinstance(stmt, Assign):
            for target in stmt.targets:
                self.testlist(target)
                self.sym("=")
            self.testlist(stmt.value)
            return
        if isinstance(stmt, AugAssign):
            self.expr(stmt.target, P_POSTFIX)
            self.ph(self.augop[stmt.op])
            self.testlist(stmt.value)
            return
        if isinstance(stmt, AnnAssign):
            self.expr(stmt.target, P_POSTFIX)
            self.sym(":")
            self.expr(stmt.annotation, P_LAMBDA)
            if stmt.value is not None:
                self.sym("=")
                self.testlist(stmt.value)
            return
        if isinstance(stmt, Return):
            self.ph(self.kw["return"])
            if stmt.value is not None:
                self.testlist(stmt.value)
            return
        if isinstance(stmt, Pass):
            self.ph(self.kw["pass"])
            return
        if isinstance(stmt, Break):
            self.ph(self.kw["break"])
            return
        if isinstance(stmt, Continue):
            self.ph(self.kw["continue"])
            return
        if isinstance(stmt, Raise):
            self.ph(self.kw["raise"])
            if stmt.exc is not None:
                self.expr(stmt.exc, P_LAMBDA)
                if stmt.cause is not None:
                    self.ph(self.kw["raise_from"])
                    self.expr(stmt.cause, P_LAMBDA)
            return
        if isinstance(stmt, Assert):
            self.ph(self.kw["assert"])
            self.expr(stmt.test, P_LAMBDA)
            if stmt.msg is not None:
                self.sym(",")
                self.expr(stmt.msg, P_LAMBDA)
            return
        if isinstance(stmt, Delete):
            self.ph(self.kw["del"])
            for i, target in enumerate(stmt.targets):
                if i:
                    self.sym(",")
                self.expr(target, P_LAMBDA)
            return
        if isinstance(stmt, (Global, Nonlocal)):
            self.ph(self.kw["global" if isinstance(stmt, Global) else "nonlocal"])
            for i, n in enumerate(stmt.names):
                if i:
                    self.sym(",")
                self.name(n)
            return
        if isinstance(stmt, Import):
            self.ph(self.kw["import"])
            for i, alias in enumerate(stmt.names):
                if i:
                    self.sym(",")
                self.dotted(alias.name)
                if alias.asname:
                    self.ph(self.kw["as"])
                    self.name(alias.asname)
            return
        if isinstance(stmt, ImportFrom):
            self.ph(self.kw["from_import"])
            for _ in range(stmt.level):
                self.sym(".")
            if stmt.module:
                self.dotted(stmt.module)
            if stmt.star:
                self.ph(self.import_star)
                return
            for i, alias in enumerate(stmt.names):
                if i:
                    self.sym(",")
                self.name(alias.name)
                if alias.asname:
                    self.ph(self.kw["as"])
                    self.name(alias.asname)
            return
        if isinstance(stmt, If):
            self.ph(self.kw["if"])
            self.expr(stmt.test, P_LAMBDA)
            self.block(stmt.body)
            for clause in stmt.elifs:
                self.ph(self.kw["elif"])
                self.expr(clause.test, P_LAMBDA)
                self.block(clause.body)
            if stmt.orelse is not None:
                self.ph(self.kw["else"])
                self.block(stmt.orelse)
            return
        if isinstance(stmt, While):
            self.ph(self.kw["while"])
            self.expr(stmt.test, P_LAMBDA)
            self.block(stmt.body)
            if stmt.orelse is not None:
                self.ph(self.kw["else"])
                self.block(stmt.orelse)
            return
        if isinstance(stmt, For):
            self.ph(self.kw["for"])
            self.target_list(stmt.target)
            self.ph(self.kw["in"])
            self.testlist(stmt.iter)
            self.block(stmt.body)
            if stmt.orelse is not None:
                self.ph(self.kw["else"])
                self.block(stmt.orelse)
            return
        if isinstance(stmt, With):
            self.ph(self.kw["with"])
            for i, item in enumerate(stmt.items):
                if i:
                    self.lexemes.append((" ", _SYM))
                self.expr(item.context, P_LAMBDA)
                if item.target is not None:
                    self.ph(self.kw["as"])
                    self.expr(item.target, P_LAMBDA)
            self.block(stmt.body)
            return
        if isinstance(stmt, Try):
            self.ph(self.kw["try"])
            self.block(stmt.body)
            for h in stmt.handlers:
                self.ph(self.kw["except"])
                if h.type is not None:
                    self.expr(h.type, P_LAMBDA)
                    if h.name is not None:
                        self.ph(self.kw["as"])
                        self.name(h.name)
                self.block(h.body)
            if stmt.orelse is not None:
                self.ph(self.kw["else"])
                self.block(stmt.orelse)
            if stmt.finalbody is not None:
                self.ph(self.kw["finally"])
                self.block(stmt.finalbody)
            return
        if isinstance(stmt, FunctionDef):
            for deco in stmt.decorators:
                self.ph(self.decorator)
                self.expr(deco, P_POSTFIX)
            self.ph(self.kw["def"])
            self.name(stmt.name)
            self.params(stmt.params)
            if stmt.returns is not None:
                self.ph(self.arrow)
                self.expr(stmt.returns, P_LAMBDA)
            self.block(stmt.body)
            return
        if isinstance(stmt, ClassDef):
            for deco in stmt.decorators:
                self.ph(self.decorator)
                self.expr(deco, P_POSTFIX)
            self.ph(self.kw["class"])
            self.name(stmt.name)
            if stmt.bases:
                self.sym("(")
                for i, base in enumerate(stmt.bases):
                    if i:
                        self.sym(",")
                    self.expr(base, P_LAMBDA)
                self.sym(")")
            self.block(stmt.body)
            return
        raise EmitError(f"cannot emit statement of type {type(stmt).__name__}")

    def dotted(self, name: str) -> None:
        parts = name.split(".")
        for i, part in enumerate(parts):
            if i:
                self.sym(".")
            self.name(part)

    def params(self, params: Params) -> None:
        def one(p: Param) -> None:
            self.name(p.name)
            if p.annotation is not None:
                self.sym(":")
                self.expr(p.annotation, P_LAMBDA)
            if p.default is not None:
                self.sym("=")
                self.expr(p.default, P_LAMBDA)

        for p in params.pos_only:
            one(p)
        if params.pos_only:
            self.ph(self.posonly)
        for p in params.args:
            one(p)
        if params.vararg is not None:
            self.ph(self.vararg)
            one(params.vararg)
        elif params.kw_only:
            self.ph(self.kwonly)
        for p in params.kw_only:
            one(p)
        if params.kwarg is not None:
            self.ph(self.kwarg)
            one(params.kwarg)

    # --- expressions ----------------------------------------------------------

    def testlist(self, node) -> None:
        """Emit in bare-tuple position (assignment sides, returns, headers)."""
        if isinstance(node, TupleExpr) and node.elts:
            self.tuple_inner(node)
        else:
            self.expr(node, P_TUPLE)

    def target_list(self, node) -> None:
        self.testlist(node)

    def tuple_inner(self, node: TupleExpr) -> None:
        for i, e in enumerate(node.elts):
            if i:
                self.sym(",")
            self.expr(e, P_LAMBDA)
        if len(node.elts) == 1:
            self.sym(",")

    def expr(self, node, min_prec: int) -> None:
        prec = self._prec(node)
        if prec < min_prec:
            self.sym("(")
            self._expr_inner(node)
            self.sym(")")
        else:
            self._expr_inner(node)

    def _prec(self, node) -> int:
        if isinstance(node, TupleExpr):
            return P_ATOM if not node.elts else P_TUPLE
        if isinstance(node, BinOp):
            return BINOP_PREC[node.op]
        if isinstance(node, UnaryOp):
            return P_NOT if node.op == "not" else P_UNARY
        if isinstance(node, BoolOp):
            return BOOLOP_PREC[node.op]
        if isinstance(node, Compare):
            return P_COMPARE
        if isinstance(node, (Lambda, IfExp)):
            return P_LAMBDA
        if isinstance(node, Starred):
            return P_LAMBDA
        if isinstance(node, Slice):
            return P_TUPLE
        if isinstance(node, (Call, Attribute, Subscript)):
            return P_POSTFIX
        return P_ATOM

    def _expr_inner(self, node) -> None:
        if isinstance(node, Name):
            self.name(node.id)
            return
        if isinstance(node, (IntLit, FloatLit)):
            self.lexemes.append((node.raw, _NUM))
            return
        if isinstance(node, StringLit):
            for i, part in enumerate(node.parts):
                if i:
                    self.ph(self.concat)
                self.lexemes.append((part, _STR))
            return
        if isinstance(node, FString):
            self.lexemes.append((node.raw, _STR))
            return
        if isinstance(node, BoolLit):
            self.ph(self.kw["True" if node.value else "False"])
            return
        if isinstance(node, NoneLit):
            self.ph(self.kw["None"])
            return
        if isinstance(node, TupleExpr):
            if not node.elts:
                self.sym("(")
                self.sym(")")
            else:
                self.tuple_inner(node)
            return
        if isinstance(node, ListExpr):
            self.sym("[")
            for i, e in enumerate(node.elts):
                if i:
                    self.sym(",")
                self.expr(e, P_LAMBDA)
            self.sym("]")
            return
        if isinstance(node, SetExpr):
            self.sym("{")
            for i, e in enumerate(node.elts):
                if i:
                    self.sym(",")
                self.expr(e, P_LAMBDA)
            self.sym("}")
            return
        if isinstance(node, DictExpr):
            self.sym("{")
            for i, item in enumerate(node.items):
                if i:
                    self.sym(",")
                self.dict_item(item)
            self.sym("}")
            return
        if isinstance(node, (ListComp, SetComp, GenExp)):
            opens = {"ListComp": ("[", "]"), "SetComp": ("{", "}"), "GenExp": ("(", ")")}
            left, right = opens[type(node).__name__]
            self.sym(left)
            self.expr(node.element, P_LAMBDA)
            self.comp_clauses(node.clauses)
            self.sym(right)
            return
        if isinstance(node, DictComp):
            self.sym("{")
            self.expr(node.key, P_LAMBDA)
            self.sym(":")
            self.expr(node.value, P_LAMBDA)
            self.comp_clauses(node.clauses)
            self.sym("}")
            return
        if isinstance(node, BinOp):
            if node.op == "**":
                self.expr(node.left, P_POWER + 1)
                self.emit_op(self.binop["**"])
                self.expr(node.right, P_UNARY)
                return
            prec = BINOP_PREC[node.op]
            self.expr(node.left, prec)
            self.emit_op(self.binop[node.op])
            self.expr(node.right, prec + 1)
            return
        if isinstance(node, UnaryOp):
            if node.op == "not":
                self.ph(self.kw["not"])
                self.expr(node.operand, P_NOT)
            else:
                self.sym(node.op)
                self.expr(node.operand, P_UNARY)
            return
        if isinstance(node, BoolOp):
            prec = BOOLOP_PREC[node.op]
            for i, v in enumerate(node.values):
                if i:
                    self.ph(self.kw[node.op])
                self.expr(v, prec + 1)
            return
        if isinstance(node, Compare):
            self.expr(node.left, P_COMPARE + 1)
            for op, comp in zip(node.ops, node.comparators):
                self.emit_op(self.cmpop[op])
                self.expr(comp, P_COMPARE + 1)
            return
        if isinstance(node, Call):
            self.expr(node.func, P_POSTFIX)
            self.sym("(")
            if len(node.args) == 1 and not node.keywords and isinstance(node.args[0], GenExp):
                gen = node.args[0]
                self.expr(gen.element, P_LAMBDA)
                self.comp_clauses(gen.clauses)
                self.sym(")")
                return
            first = True
            for a in node.args:
                if not first:
                    self.sym(",")
                first = False
                if isinstance(a, Starred):
                    self.ph(self.star)
                    self.expr(a.value, P_BITOR)
                else:
                    self.expr(a, P_LAMBDA)
            for kw in node.keywords:
                if not first:
                    self.sym(",")
                first = False
                if kw.name is None:
                    self.ph(self.dstar)
                    self.expr(kw.value, P_BITOR)
                else:
                    self.name(kw.name)
                    self.sym("=")
                    self.expr(kw.value, P_LAMBDA)
            self.sym(")")
            return
        if isinstance(node, Attribute):
            if isinstance(node.value, (IntLit, FloatLit)):
                self.sym("(")
                self._expr_inner(node.value)
                self.sym(")")
            else:
                self.expr(node.value, P_POSTFIX)
            self.sym(".")
            self.name(node.attr)
            return
        if isinstance(node, Subscript):
            self.expr(node.value, P_POSTFIX)
            self.sym("[")
            self.index(node.index)
            self.sym("]")
            return
        if isinstance(node, Slice):
            self.slice(node)
            return
        if isinstance(node, Lambda):
            self.ph(self.kw["lambda"])
            self.params(node.params)
            self.ph(self.lambda_body)
            self.expr(node.body, P_LAMBDA)
            return
        if isinstance(node, IfExp):
            self.expr(node.body, P_OR)
            self.ph(self.ternary_if)
            self.expr(node.test, P_OR)
            self.ph(self.ternary_else)
            self.expr(node.orelse, P_LAMBDA)
            return
        if isinstance(node, Starred):
            self.ph(self.star)
            self.expr(node.value, P_BITOR)
            return
        raise EmitError(f"cannot emit expression of type {type(node).__name__}")

    def dict_item(self, item: DictItem) -> None:
        if item.key is None:
            self.ph(self.dstar)
            self.expr(item.value, P_BITOR)
        else:
            self.expr(item.key, P_LAMBDA)
            self.sym(":")
            self.expr(item.value, P_LAMBDA)

    def comp_clauses(self, clauses: list) -> None:
        for c in clauses:
            self.ph(self.comp_for)
            self.target_list(c.target)
            self.ph(self.kw["in"])
            self.expr(c.iter, P_OR)
            for cond in c.ifs:
                self.ph(self.comp_if)
                self.expr(cond, P_OR)

    def index(self, index) -> None:
        if isinstance(index, Slice):
            self.slice(index)
            return
        if isinstance(index, TupleExpr) and index.elts:
            for i, e in enumerate(index.elts):
                if i:
                    self.sym(",")
                if isinstance(e, Slice):
                    self.slice(e)
                else:
                    self.expr(e, P_LAMBDA)
            if len(index.elts) == 1:
                self.sym(",")
            return
        self.expr(index, P_TUPLE)

    def slice(self, s: Slice) -> None:
        if s.lower is not None:
            self.expr(s.lower, P_OR)
        self.sym(":")
        if s.upper is not None:
            self.expr(s.upper, P_OR)
        if s.step is not None:
            self.sym(":")
            self.expr(s.step, P_OR)
