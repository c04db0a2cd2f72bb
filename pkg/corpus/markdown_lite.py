"""Rendering a tiny Markdown subset to HTML."""


def escape_html(text):
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def render_inline(text):
    out = escape_html(text)
    while "**" in out:
        first = out.find("**")
        second = out.find("**", first + 2)
        if second < 0:
            break
        inner = out[first + 2:second]
        out = out[:first] + "<strong>" + inner + "</strong>" + out[second + 2:]
    while "`" in out:
        first = out.find("`")
        second = out.find("`", first + 1)
        if second < 0:
            break
        inner = out[first + 1:second]
        out = out[:first] + "<code>" + inner + "</code>" + out[second + 1:]
    return out


def render(text):
    html = []
    in_list = False
    for line in text.splitlines():
        stripped = line.strip()
        if stripped.startswith("- "):
            if not in_list:
                html.append("<ul>")
                in_list = True
            html.append(f"<li>{render_inline(stripped[2:])}</li>")
            continue
        if in_list:
            html.append("</ul>")
            in_list = False
        if not stripped:
            continue
        level = 0
        while level < len(stripped) and stripped[level] == "#":
            level += 1
        if 0 < level <= 6 and level < len(stripped) and stripped[level] == " ":
            content = render_inline(stripped[level + 1:])
            html.append(f"<h{level}>{content}</h{level}>")
        else:
            html.append(f"<p>{render_inline(stripped)}</p>")
    if in_list:
        html.append("</ul>")
    return "\n".join(html)
