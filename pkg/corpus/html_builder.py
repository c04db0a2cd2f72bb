"""Programmatic HTML fragments with attribute escaping."""

VOID_TAGS = {"br", "hr", "img", "input", "meta", "link"}


def escape(text):
    out = str(text).replace("&", "&amp;")
    out = out.replace("<", "&lt;").replace(">", "&gt;")
    return out.replace('"', "&quot;")


def render_attrs(attrs):
    parts = []
    for key in sorted(attrs):
        value = attrs[key]
        if value is True:
            parts.append(key)
        elif value is not None and value is not False:
            parts.append(f'{key}="{escape(value)}"')
    if parts:
        return " " + " ".join(parts)
    return ""


def tag(name, content="", **attrs):
    attr_text = render_attrs(attrs)
    if name in VOID_TAGS:
        return f"<{name}{attr_text}/>"
    return f"<{name}{attr_text}>{content}</{name}>"


def unordered_list(items, **attrs):
    body = "".join(tag("li", escape(item)) for item in items)
    return tag("ul", body, **attrs)


def table(rows, header=None):
    parts = []
    if header:
        cells = "".join(tag("th", escape(h)) for h in header)
        parts.append(tag("tr", cells))
    for row in rows:
        cells = "".join(tag("td", escape(cell)) for cell in row)
        parts.append(tag("tr", cells))
    return tag("table", "".join(parts))


def link_list(links):
    items = [tag("a", escape(text), href=url) for text, url in links]
    return unordered_list(items) if links else ""
