"""Aligned plain-text table rendering."""


def column_widths(rows, header=None):
    widths = []
    source = [header] + list(rows) if header else list(rows)
    for row in source:
        for i, cell in enumerate(row):
            text = str(cell)
            if i >= len(widths):
                widths.append(len(text))
            else:
                widths[i] = max(widths[i], len(text))
    return widths


def format_row(row, widths, aligns=None):
    cells = []
    for i, cell in enumerate(row):
        text = str(cell)
        width = widths[i] if i < len(widths) else len(text)
        align = aligns[i] if aligns and i < len(aligns) else "<"
        if align == ">":
            cells.append(text.rjust(width))
        elif align == "^":
            cells.append(text.center(width))
        else:
            cells.append(text.ljust(width))
    return " | ".join(cells).rstrip()


def render(rows, header=None, aligns=None):
    widths = column_widths(rows, header)
    lines = []
    if header:
        lines.append(format_row(header, widths, aligns))
        lines.append("-+-".join("-" * w for w in widths))
    for row in rows:
        lines.append(format_row(row, widths, aligns))
    return "\n".join(lines)


def from_dicts(records, columns=None):
    if not records:
        return ""
    keys = columns or sorted({k for r in records for k in r})
    rows = [[r.get(k, "") for k in keys] for r in records]
    return render(rows, header=keys)
