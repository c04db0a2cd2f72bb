"""Serializing plain data to JSON text by hand."""


def dump(value, indent=None, level=0):
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, (int, float)):
        return repr(value)
    if isinstance(value, str):
        return dump_string(value)
    if isinstance(value, (list, tuple)):
        return dump_array(value, indent, level)
    if isinstance(value, dict):
        return dump_object(value, indent, level)
    raise TypeError(f"cannot serialize {type(value).__name__}")


ESCAPES = {'"': '\\"', "\\": "\\\\", "\n": "\\n", "\t": "\\t", "\r": "\\r"}


def dump_string(text):
    out = ['"']
    for ch in text:
        if ch in ESCAPES:
            out.append(ESCAPES[ch])
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    out.append('"')
    return "".join(out)


def dump_array(items, indent, level):
    if not items:
        return "[]"
    parts = [dump(item, indent, level + 1) for item in items]
    if indent is None:
        return "[" + ", ".join(parts) + "]"
    pad = " " * indent * (level + 1)
    closing = " " * indent * level
    inner = (",\n" + pad).join(parts)
    return "[\n" + pad + inner + "\n" + closing + "]"


def dump_object(mapping, indent, level):
    if not mapping:
        return "{}"
    parts = []
    for key in mapping:
        if not isinstance(key, str):
            raise TypeError("object keys must be strings")
        parts.append(dump_string(key) + ": " + dump(mapping[key], indent, level + 1))
    if indent is None:
        return "{" + ", ".join(parts) + "}"
    pad = " " * indent * (level + 1)
    closing = " " * indent * level
    inner = (",\n" + pad).join(parts)
    return "{\n" + pad + inner + "\n" + closing + "}"


def compact(value):
    return dump(value)


def pretty(value, indent=2):
    return dump(value, indent=indent)
