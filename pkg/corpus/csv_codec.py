"""Minimal CSV encoding and decoding with quote handling."""


def parse_line(line, delimiter=","):
    fields = []
    current = []
    in_quotes = False
    i = 0
    while i < len(line):
        ch = line[i]
        if in_quotes:
            if ch == '"':
                if i + 1 < len(line) and line[i + 1] == '"':
                    current.append('"')
                    i += 1
                else:
                    in_quotes = False
            else:
                current.append(ch)
        elif ch == '"':
            in_quotes = True
        elif ch == delimiter:
            fields.append("".join(current))
            current = []
        else:
            current.append(ch)
        i += 1
    fields.append("".join(current))
    return fields


def format_field(value, delimiter=","):
    text = str(value)
    if delimiter in text or '"' in text or "\n" in text:
        escaped = text.replace('"', '""')
        return f'"{escaped}"'
    return text


def format_line(fields, delimiter=","):
    return delimiter.join(format_field(f, delimiter) for f in fields)


def parse_table(text, delimiter=","):
    rows = []
    for line in text.splitlines():
        if line.strip():
            rows.append(parse_line(line, delimiter))
    return rows


def to_dicts(rows):
    if not rows:
        return []
    header = rows[0]
    return [dict(zip(header, row)) for row in rows[1:]]
