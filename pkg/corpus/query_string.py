"""URL query string parsing and building."""

SAFE = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789-_.~"


def quote(text):
    out = []
    for byte in text.encode("utf-8"):
        ch = chr(byte)
        if ch in SAFE:
            out.append(ch)
        else:
            out.append(f"%{byte:02X}")
    return "".join(out)


def unquote(text):
    data = bytearray()
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "%" and i + 2 < len(text) + 1:
            try:
                data.append(int(text[i + 1:i + 3], 16))
                i += 3
                continue
            except ValueError:
                pass
        if ch == "+":
            data.append(ord(" "))
        else:
            data.extend(ch.encode("utf-8"))
        i += 1
    return data.decode("utf-8", "replace")


def parse_qs(query):
    params = {}
    for pair in query.lstrip("?").split("&"):
        if not pair:
            continue
        key, _, value = pair.partition("=")
        params.setdefault(unquote(key), []).append(unquote(value))
    return params


def build_qs(params):
    parts = []
    for key in sorted(params):
        values = params[key]
        if isinstance(values, str):
            values = [values]
        for value in values:
            parts.append(f"{quote(key)}={quote(str(value))}")
    return "&".join(parts)
