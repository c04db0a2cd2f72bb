"""A forgiving pull-parser for a tiny XML subset."""


class XmlError(Exception):
    pass


def events(text):
    """Yield-free event list: (kind, payload) tuples."""
    out = []
    i = 0
    n = len(text)
    while i < n:
        if text[i] == "<":
            close = text.find(">", i)
            if close < 0:
                raise XmlError("unclosed tag")
            body = text[i + 1:close].strip()
            if body.startswith("/"):
                out.append(("end", body[1:].strip()))
            elif body.endswith("/"):
                name, attrs = parse_tag(body[:-1])
                out.append(("start", (name, attrs)))
                out.append(("end", name))
            elif body.startswith("?") or body.startswith("!"):
                pass
            else:
                name, attrs = parse_tag(body)
                out.append(("start", (name, attrs)))
            i = close + 1
        else:
            end = text.find("<", i)
            if end < 0:
                end = n
            chunk = text[i:end]
            if chunk.strip():
                out.append(("text", chunk.strip()))
            i = end
    return out


def parse_tag(body):
    parts = body.split()
    name = parts[0]
    attrs = {}
    for part in parts[1:]:
        key, _, value = part.partition("=")
        attrs[key] = value.strip('"').strip("'")
    return name, attrs


def to_tree(text):
    root = {"tag": None, "attrs": {}, "children": [], "text": ""}
    stack = [root]
    for kind, payload in events(text):
        if kind == "start":
            name, attrs = payload
            node = {"tag": name, "attrs": attrs, "children": [], "text": ""}
            stack[-1]["children"].append(node)
            stack.append(node)
        elif kind == "end":
            if len(stack) == 1 or stack[-1]["tag"] != payload:
                raise XmlError(f"mismatched closing tag {payload!r}")
            stack.pop()
        else:
            stack[-1]["text"] += payload
    if len(stack) != 1:
        raise XmlError("unclosed elements remain")
    return root["children"]


def find_all(nodes, tag_name):
    found = []
    stack = list(nodes)
    while stack:
        node = stack.pop(0)
        if node["tag"] == tag_name:
            found.append(node)
        stack = node["children"] + stack
    return found
