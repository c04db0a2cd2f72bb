"""A tiny placeholder substitution engine: {name} becomes a value."""


class MissingKey(Exception):
    """Raised when a template references an unknown variable."""


def render(template, variables, strict=True):
    out = []
    i = 0
    n = len(template)
    while i < n:
        ch = template[i]
        if ch == "{" and i + 1 < n and template[i + 1] == "{":
            out.append("{")
            i += 2
        elif ch == "}" and i + 1 < n and template[i + 1] == "}":
            out.append("}")
            i += 2
        elif ch == "{":
            end = template.find("}", i)
            if end < 0:
                raise ValueError("unclosed placeholder")
            key = template[i + 1:end].strip()
            if key in variables:
                out.append(str(variables[key]))
            elif strict:
                raise MissingKey(key)
            i = end + 1
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def required_keys(template):
    keys = set()
    i = 0
    while i < len(template):
        if template[i] == "{" and template[i:i + 2] != "{{":
            end = template.find("}", i)
            if end > i:
                keys.add(template[i + 1:end].strip())
                i = end
        i += 1
    return keys
