"""A1-style cell references and dependency-aware evaluation."""


def column_number(letters):
    value = 0
    for ch in letters.upper():
        if not ch.isalpha():
            raise ValueError(f"bad column {letters!r}")
        value = value * 26 + ord(ch) - ord("A") + 1
    return value


def column_letters(number):
    if number < 1:
        raise ValueError("columns start at 1")
    out = []
    while number:
        number, rem = divmod(number - 1, 26)
        out.append(chr(ord("A") + rem))
    return "".join(reversed(out))


def parse_ref(ref):
    letters = ""
    digits = ""
    for ch in ref:
        if ch.isalpha() and not digits:
            letters += ch
        elif ch.isdigit():
            digits += ch
        else:
            raise ValueError(f"bad reference {ref!r}")
    if not letters or not digits:
        raise ValueError(f"bad reference {ref!r}")
    return column_number(letters), int(digits)


class Sheet:
    def __init__(self):
        self.cells = {}

    def set(self, ref, value):
        self.cells[parse_ref(ref)] = value

    def value(self, ref, seen=None):
        key = parse_ref(ref) if isinstance(ref, str) else ref
        seen = seen or set()
        if key in seen:
            raise ValueError("circular reference")
        raw = self.cells.get(key, 0)
        if isinstance(raw, str) and raw.startswith("="):
            seen.add(key)
            total = 0
            for part in raw[1:].split("+"):
                token = part.strip()
                if token.replace(".", "", 1).isdigit():
                    total += float(token)
                else:
                    total += self.value(token, seen)
            return total
        return raw

    def range_sum(self, start, end):
        c1, r1 = parse_ref(start)
        c2, r2 = parse_ref(end)
        total = 0
        for c in range(min(c1, c2), max(c1, c2) + 1):
            for r in range(min(r1, r2), max(r1, r2) + 1):
                total += self.value((c, r))
        return total
