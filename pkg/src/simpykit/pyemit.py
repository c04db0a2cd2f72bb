"""Canonical Python emitter.

Fixed output style: 4-space indents, one statement per line, single spaces
around binary operators and after commas, no trailing whitespace, exactly
one final newline (empty module emits empty text).  Parentheses are
inserted only where precedence or grammar requires them; original
formatting is not preserved, only content.
"""

from __future__ import annotations

from .errors import EmitError
from .nodes import (
    Alias, AnnAssign, Assert, Assign, Attribute, AugAssign, BinOp, BoolLit,
    BoolOp, Break, Call, ClassDef, Comment, Compare, Continue, Delete,
    DictComp, DictExpr, DictItem, ExprStmt, FloatLit, For, FString,
    FunctionDef, GenExp, Global, If, IfExp, Import, ImportFrom, IntLit, Lambda,
    ListComp, ListExpr, Module, Name, NoneLit, Nonlocal, Param, Params, Pass,
    Raise, Return, SetComp, SetExpr, Slice, Starred, StringLit, Subscript,
    TupleExpr, Try, UnaryOp, While, With,
)
from .ops import (
    BINOP_PREC, BOOLOP_PREC, P_ATOM, P_BITOR, P_COMPARE, P_LAMBDA, P_NOT,
    P_OR, P_POSTFIX, P_POWER, P_TUPLE, P_UNARY,
)

INDENT_UNIT = "    "


def emit_python(tree: Module) -> str:
    """Emit canonical Python text; re-parsing yields an equal tree."""
    if not isinstance(tree, Module):
        raise EmitError(f"expected a Module, got {type(tree).__name__}")
    lines: list[str] = []
    _emit_body(tree.body, 0, lines)
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


def _emit_body(body: list, depth: int, lines: list[str]) -> None:
    can_attach = False
    for stmt in body:
        if isinstance(stmt, Comment):
            _emit_comment(stmt, depth, lines, can_attach)
            can_attach = False
            continue
        before = len(lines)
        _emit_stmt(stmt, depth, lines)
        # trailing comments may only ride on a single-line simple statement
        # from the same suite, never reach into a nested block
        can_attach = len(lines) == before + 1


def _emit_comment(stmt: Comment, depth: int, lines: list[str], can_attach: bool) -> None:
    if stmt.trailing and can_attach:
        lines[-1] += "  #" + stmt.text
    else:
        lines.append(INDENT_UNIT * depth + "#" + stmt.text)


def _emit_stmt(stmt, depth: int, lines: list[str]) -> None:
    pad = INDENT_UNIT * depth
    if isinstance(stmt, Comment):
        _emit_comment(stmt, depth, lines, False)
        return
    if isinstance(stmt, ExprStmt):
        lines.append(pad + _expr(stmt.value, P_TUPLE))
        return
    if isinstance(stmt, Assign):
        chain = " = ".join(_expr(t, P_TUPLE) for t in stmt.targets)
        lines.append(pad + chain + " = " + _expr(stmt.value, P_TUPLE))
        return
    if isinstance(stmt, AugAssign):
        lines.append(pad + _expr(stmt.target, P_POSTFIX) + f" {stmt.op}= " + _expr(stmt.value, P_TUPLE))
        return
    if isinstance(stmt, AnnAssign):
        text = pad + _expr(stmt.target, P_POSTFIX) + ": " + _expr(stmt.annotation, P_LAMBDA)
        if stmt.value is not None:
            text += " = " + _expr(stmt.value, P_TUPLE)
        lines.append(text)
        return
    if isinstance(stmt, Return):
        lines.append(pad + ("return" if stmt.value is None else "return " + _expr(stmt.value, P_TUPLE)))
        return
    if isinstance(stmt, Pass):
        lines.append(pad + "pass")
        return
    if isinstance(stmt, Break):
        lines.append(pad + "break")
        return
    if isinstance(stmt, Continue):
        lines.append(pad + "continue")
        return
    if isinstance(stmt, Raise):
        text = "raise"
        if stmt.exc is not None:
            text += " " + _expr(stmt.exc, P_LAMBDA)
            if stmt.cause is not None:
                text += " from " + _expr(stmt.cause, P_LAMBDA)
        lines.append(pad + text)
        return
    if isinstance(stmt, Assert):
        text = "assert " + _expr(stmt.test, P_LAMBDA)
        if stmt.msg is not None:
            text += ", " + _expr(stmt.msg, P_LAMBDA)
        lines.append(pad + text)
        return
    if isinstance(stmt, Delete):
        lines.append(pad + "del " + ", ".join(_expr(t, P_LAMBDA) for t in stmt.targets))
        return
    if isinstance(stmt, (Global, Nonlocal)):
        kw = "global" if isinstance(stmt, Global) else "nonlocal"
        lines.append(pad + f"{kw} " + ", ".join(stmt.names))
        return
    if isinstance(stmt, Import):
        lines.append(pad + "import " + ", ".join(_alias(a) for a in stmt.names))
        return
    if isinstance(stmt, ImportFrom):
        head = "from " + "." * stmt.level + (stmt.module or "") + " import "
        if stmt.star:
            lines.append(pad + head + "*")
        else:
            lines.append(pad + head + ", ".join(_alias(a) for a in stmt.names))
        return
    if isinstance(stmt, If):
        lines.append(pad + "if " + _expr(stmt.test, P_LAMBDA) + ":")
        _suite(stmt.body, depth, lines)
        for clause in stmt.elifs:
            lines.append(pad + "elif " + _expr(clause.test, P_LAMBDA) + ":")
            _suite(clause.body, depth, lines)
        if stmt.orelse is not None:
            lines.append(pad + "else:")
            _suite(stmt.orelse, depth, lines)
        return
    if isinstance(stmt, While):
        lines.append(pad + "while " + _expr(stmt.test, P_LAMBDA) + ":")
        _suite(stmt.body, depth, lines)
        if stmt.orelse is not None:
            lines.append(pad + "else:")
            _suite(stmt.orelse, depth, lines)
        return
    if isinstance(stmt, For):
        lines.append(
            pad + "for " + _target_list(stmt.target) + " in " + _expr(stmt.iter, P_TUPLE) + ":"
        )
        _suite(stmt.body, depth, lines)
        if stmt.orelse is not None:
            lines.append(pad + "else:")
            _suite(stmt.orelse, depth, lines)
        return
    if isinstance(stmt, With):
        items = []
        for item in stmt.items:
            text = _expr(item.context, P_LAMBDA)
            if item.target is not None:
                text += " as " + _expr(item.target, P_LAMBDA)
            items.append(text)
        lines.append(pad + "with " + ", ".join(items) + ":")
        _suite(stmt.body, depth, lines)
        return
    if isinstance(stmt, Try):
        lines.append(pad + "try:")
        _suite(stmt.body, depth, lines)
        for h in stmt.handlers:
            head = "except"
            if h.type is not None:
                head += " " + _expr(h.type, P_LAMBDA)
                if h.name is not None:
                    head += " as " + h.name
            lines.append(pad + head + ":")
            _suite(h.body, depth, lines)
        if stmt.orelse is not None:
            lines.append(pad + "else:")
            _suite(stmt.orelse, depth, lines)
        if stmt.finalbody is not None:
            lines.append(pad + "finally:")
            _suite(stmt.finalbody, depth, lines)
        return
    if isinstance(stmt, FunctionDef):
        for deco in stmt.decorators:
            lines.append(pad + "@" + _expr(deco, P_POSTFIX))
        head = f"def {stmt.name}({_params(stmt.params)})"
        if stmt.returns is not None:
            head += " -> " + _expr(stmt.returns, P_LAMBDA)
        lines.append(pad + head + ":")
        _suite(stmt.body, depth, lines)
        return
    if isinstance(stmt, ClassDef):
        for deco in stmt.decorators:
            lines.append(pad + "@" + _expr(deco, P_POSTFIX))
        head = f"class {stmt.name}"
        if stmt.bases:
            head += "(" + ", ".join(_expr(b, P_LAMBDA) for b in stmt.bases) + ")"
        lines.append(pad + head + ":")
        _suite(stmt.body, depth, lines)
        return
    raise EmitError(f"cannot emit statement of type {type(stmt).__name__}")


def _suite(body: list, depth: int, lines: list[str]) -> None:
    if not body or all(isinstance(s, Comment) for s in body):
        raise EmitError("suite without statements")
    _emit_body(body, depth + 1, lines)


def _alias(a: Alias) -> str:
    return a.name if a.asname is None else f"{a.name} as {a.asname}"


def _target_list(target) -> str:
    # for-loop targets appear bare: "for a, b in ..." without parentheses
    if isinstance(target, TupleExpr) and target.elts:
        return _tuple_inner(target)
    return _expr(target, P_TUPLE)


def _params(params: Params) -> str:
    parts: list[str] = []
    for p in params.pos_only:
        parts.append(_param(p))
    if params.pos_only:
        parts.append("/")
    for p in params.args:
        parts.append(_param(p))
    if params.vararg is not None:
        parts.append("*" + _param(params.vararg))
    elif params.kw_only:
        parts.append("*")
    for p in params.kw_only:
        parts.append(_param(p))
    if params.kwarg is not None:
        parts.append("**" + _param(params.kwarg))
    return ", ".join(parts)


def _param(p: Param) -> str:
    text = p.name
    if p.annotation is not None:
        text += ": " + _expr(p.annotation, P_LAMBDA)
        if p.default is not None:
            text += " = " + _expr(p.default, P_LAMBDA)
    elif p.default is not None:
        text += "=" + _expr(p.default, P_LAMBDA)
    return text


def _tuple_inner(t: TupleExpr) -> str:
    if len(t.elts) == 1:
        return _expr(t.elts[0], P_LAMBDA) + ","
    return ", ".join(_expr(e, P_LAMBDA) for e in t.elts)


# --- expressions ----------------------------------------------------------


def _expr(node, min_prec: int) -> str:
    text, prec = _render(node)
    if prec < min_prec:
        return "(" + text + ")"
    return text


def _render(node) -> tuple[str, int]:
    if isinstance(node, Name):
        return node.id, P_ATOM
    if isinstance(node, (IntLit, FloatLit)):
        return node.raw, P_ATOM
    if isinstance(node, StringLit):
        return " ".join(node.parts), P_ATOM
    if isinstance(node, FString):
        return node.raw, P_ATOM
    if isinstance(node, BoolLit):
        return ("True" if node.value else "False"), P_ATOM
    if isinstance(node, NoneLit):
        return "None", P_ATOM
    if isinstance(node, TupleExpr):
        if not node.elts:
            return "()", P_ATOM
        return _tuple_inner(node), P_TUPLE
    if isinstance(node, ListExpr):
        return "[" + ", ".join(_expr(e, P_LAMBDA) for e in node.elts) + "]", P_ATOM
    if isinstance(node, SetExpr):
        return "{" + ", ".join(_expr(e, P_LAMBDA) for e in node.elts) + "}", P_ATOM
    if isinstance(node, DictExpr):
        return "{" + ", ".join(_dict_item(i) for i in node.items) + "}", P_ATOM
    if isinstance(node, ListComp):
        return "[" + _expr(node.element, P_LAMBDA) + _clauses(node.clauses) + "]", P_ATOM
    if isinstance(node, SetComp):
        return "{" + _expr(node.element, P_LAMBDA) + _clauses(node.clauses) + "}", P_ATOM
    if isinstance(node, DictComp):
        inner = _expr(node.key, P_LAMBDA) + ": " + _expr(node.value, P_LAMBDA)
        return "{" + inner + _clauses(node.clauses) + "}", P_ATOM
    if isinstance(node, GenExp):
        return "(" + _expr(node.element, P_LAMBDA) + _clauses(node.clauses) + ")", P_ATOM
    if isinstance(node, BinOp):
        prec = BINOP_PREC[node.op]
        if node.op == "**":
            # right-associative; unary binds looser on the left side only
            left = _expr(node.left, P_POWER + 1)
            right = _expr(node.right, P_UNARY)
            return f"{left} ** {right}", P_POWER
        left = _expr(node.left, prec)
        right = _expr(node.right, prec + 1)
        return f"{left} {node.op} {right}", prec
    if isinstance(node, UnaryOp):
        if node.op == "not":
            return "not " + _expr(node.operand, P_NOT), P_NOT
        return node.op + _expr(node.operand, P_UNARY), P_UNARY
    if isinstance(node, BoolOp):
        prec = BOOLOP_PREC[node.op]
        joined = f" {node.op} ".join(_expr(v, prec + 1) for v in node.values)
        return joined, prec
    if isinstance(node, Compare):
        parts = [_expr(node.left, P_COMPARE + 1)]
        for op, comp in zip(node.ops, node.comparators):
            parts.append(op)
            parts.append(_expr(comp, P_COMPARE + 1))
        return " ".join(parts), P_COMPARE
    if isinstance(node, Call):
        args = [_call_arg(a) for a in node.args]
        for kw in node.keywords:
            if kw.name is None:
                args.append("**" + _expr(kw.value, P_LAMBDA))
            else:
                args.append(kw.name + "=" + _expr(kw.value, P_LAMBDA))
        if len(node.args) == 1 and not node.keywords and isinstance(node.args[0], GenExp):
            gen = node.args[0]
            inner = _expr(gen.element, P_LAMBDA) + _clauses(gen.clauses)
            return _expr(node.func, P_POSTFIX) + "(" + inner + ")", P_POSTFIX
        return _expr(node.func, P_POSTFIX) + "(" + ", ".join(args) + ")", P_POSTFIX
    if isinstance(node, Attribute):
        base = _attribute_base(node.value)
        return base + "." + node.attr, P_POSTFIX
    if isinstance(node, Subscript):
        return _expr(node.value, P_POSTFIX) + "[" + _index(node.index) + "]", P_POSTFIX
    if isinstance(node, Slice):
        return _slice(node), P_TUPLE
    if isinstance(node, Lambda):
        params = _params(node.params)
        head = "lambda " + params if params else "lambda"
        return head + ": " + _expr(node.body, P_LAMBDA), P_LAMBDA
    if isinstance(node, IfExp):
        body = _expr(node.body, P_OR)
        test = _expr(node.test, P_OR)
        orelse = _expr(node.orelse, P_LAMBDA)
        return f"{body} if {test} else {orelse}", P_LAMBDA
    if isinstance(node, Starred):
        # legal exactly where a display/target element is; never wrapped
        return "*" + _expr(node.value, P_BITOR), P_LAMBDA
    raise EmitError(f"cannot emit expression of type {type(node).__name__}")


def _attribute_base(value) -> str:
    # numeric literals need wrapping so the dot is not read as a float point
    if isinstance(value, (IntLit, FloatLit)):
        return "(" + _render(value)[0] + ")"
    return _expr(value, P_POSTFIX)


def _call_arg(arg) -> str:
    if isinstance(arg, Starred):
        return "*" + _expr(arg.value, P_BITOR)
    return _expr(arg, P_LAMBDA)


def _dict_item(item: DictItem) -> str:
    if item.key is None:
        return "**" + _expr(item.value, P_BITOR)
    return _expr(item.key, P_LAMBDA) + ": " + _expr(item.value, P_LAMBDA)


def _clauses(clauses: list) -> str:
    out = []
    for c in clauses:
        out.append(" for " + _target_list(c.target) + " in " + _expr(c.iter, P_OR))
        for cond in c.ifs:
            out.append(" if " + _expr(cond, P_OR))
    return "".join(out)


def _index(index) -> str:
    if isinstance(index, Slice):
        return _slice(index)
    if isinstance(index, TupleExpr) and index.elts:
        parts = []
        for e in index.elts:
            parts.append(_slice(e) if isinstance(e, Slice) else _expr(e, P_LAMBDA))
        if len(parts) == 1:
            return parts[0] + ","
        return ", ".join(parts)
    return _expr(index, P_TUPLE)


def _slice(s: Slice) -> str:
    # lambda/ternary bounds get parenthesized: their ':' would collide
    text = ""
    if s.lower is not None:
        text += _expr(s.lower, P_OR)
    text += ":"
    if s.upper is not None:
        text += _expr(s.upper, P_OR)
    if s.step is not None:
        text += ":" + _expr(s.step, P_OR)
    return text
