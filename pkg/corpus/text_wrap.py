"""Greedy paragraph wrapping with indentation support."""


def wrap_line(text, width):
    if width < 1:
        raise ValueError("width must be positive")
    words = text.split()
    lines = []
    current = []
    length = 0
    for word in words:
        extra = len(word) + (1 if current else 0)
        if length + extra > width and current:
            lines.append(" ".join(current))
            current = [word]
            length = len(word)
        else:
            current.append(word)
            length += extra
    if current:
        lines.append(" ".join(current))
    return lines


def wrap(text, width=72, indent="", first_indent=None):
    if first_indent is None:
        first_indent = indent
    out = []
    for paragraph in text.split("\n\n"):
        usable = width - len(indent)
        lines = wrap_line(paragraph, max(1, usable))
        for i, line in enumerate(lines):
            prefix = first_indent if i == 0 and not out else indent
            out.append(prefix + line)
        out.append("")
    while out and not out[-1]:
        out.pop()
    return "\n".join(out)


def center(text, width=72, fill=" "):
    if len(text) >= width:
        return text
    left = (width - len(text)) // 2
    right = width - len(text) - left
    return fill * left + text + fill * right


def justify(words, width):
    if not words:
        return ""
    gaps = len(words) - 1
    if gaps == 0:
        return words[0].ljust(width)
    total_chars = sum(len(w) for w in words)
    spaces = width - total_chars
    base, extra = divmod(spaces, gaps)
    out = []
    for i, word in enumerate(words[:-1]):
        out.append(word)
        out.append(" " * (base + (1 if i < extra else 0)))
    out.append(words[-1])
    return "".join(out)
