"""Structural equality, canonical dumping, and serialization for trees.

The dump is the test-oracle surface: two trees are considered the same
program exactly when their dumps are byte-identical.  Dumps (and equality)
ignore spans and the own-line/trailing placement flag of comments -- those
are layout, not content.
"""

from __future__ import annotations

import dataclasses
import json

from .nodes import NODE_TYPES, Node

SERIAL_FORMAT = "simpykit-ast"
SERIAL_VERSION = 1

# Per-type field lists with layout-only fields removed, computed once.
_FIELDS: dict[type, tuple[str, ...]] = {}


def _content_fields(cls: type) -> tuple[str, ...]:
    try:
        return _FIELDS[cls]
    except KeyError:
        skip = {"span"}
        if cls.__name__ == "Comment":
            skip.add("trailing")
        names = tuple(f.name for f in dataclasses.fields(cls) if f.name not in skip)
        _FIELDS[cls] = names
        return names


def ast_equal(a, b) -> bool:
    """Structural equality over node kind + payload + ordered children."""
    if a is b:
        return True
    if isinstance(a, Node):
        if type(a) is not type(b):
            return False
        for name in _content_fields(type(a)):
            if not ast_equal(getattr(a, name), getattr(b, name)):
                return False
        return True
    if isinstance(a, list):
        if not isinstance(b, list) or len(a) != len(b):
            return False
        return all(ast_equal(x, y) for x, y in zip(a, b))
    return type(a) is type(b) and a == b


def ast_dump(node) -> str:
    """Canonical text form: one node per line, children indented by depth.

    Deterministic, and injective up to :func:`ast_equal`; the empty module
    dumps to the single line ``Module``.
    """
    out: list[str] = []
    _dump_into(node, "", 0, out)
    return "\n".join(out)


def _dump_into(value, label: str, depth: int, out: list[str]) -> None:
    pad = "  " * depth
    prefix = f"{pad}{label}: " if label else pad
    if isinstance(value, Node):
        scalars = []
        nested = []
        for name in _content_fields(type(value)):
            v = getattr(value, name)
            if isinstance(v, (Node, list)) and not (isinstance(v, list) and _is_scalar_list(v)):
                nested.append((name, v))
            else:
                scalars.append((name, v))
        head = type(value).__name__
        if scalars:
            head += " " + " ".join(f"{n}={_scalar(v)}" for n, v in scalars)
        out.append(prefix + head)
        for name, v in nested:
            _dump_into(v, name, depth + 1, out)
    elif isinstance(value, list):
        out.append(f"{prefix}[{len(value)}]")
        for i, item in enumerate(value):
            _dump_into(item, str(i), depth + 1, out)
    else:
        out.append(prefix + _scalar(value))


def _is_scalar_list(v: list) -> bool:
    return all(not isinstance(x, (Node, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    return repr(v)


# --- serialization --------------------------------------------------------
#
# Internal versioned JSON encoding; not a public contract.  Spans are
# dropped on purpose: deserialize(serialize(t)) is ast_equal to t, no more.


def serialize(node) -> str:
    doc = {"format": SERIAL_FORMAT, "version": SERIAL_VERSION, "root": _enc(node)}
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


def deserialize(text: str):
    doc = json.loads(text)
    if doc.get("format") != SERIAL_FORMAT:
        raise ValueError("not a serialized tree")
    if doc.get("version") != SERIAL_VERSION:
        raise ValueError(f"unsupported version {doc.get('version')!r}")
    return _dec(doc["root"])


def _enc(value):
    if isinstance(value, Node):
        fields = {name: _enc(getattr(value, name)) for name in _content_fields(type(value))}
        # keep the trailing flag of comments so serialization is lossless
        # for layout too, even though equality ignores it
        if type(value).__name__ == "Comment":
            fields["trailing"] = value.trailing
        return {"k": type(value).__name__, "f": fields}
    if isinstance(value, list):
        return [_enc(v) for v in value]
    return value


def _dec(value):
    if isinstance(value, dict):
        cls = NODE_TYPES.get(value["k"])
        if cls is None:
            raise ValueError(f"unknown node kind {value['k']!r}")
        return cls(**{k: _dec(v) for k, v in value["f"].items()})
    if isinstance(value, list):
        return [_dec(v) for v in value]
    return value
