"""A tiny regex engine: literals, '.', '*', '+', '?', anchors."""


def match(pattern, text):
    """Return True if the pattern matches somewhere in the text."""
    if pattern.startswith("^"):
        return match_here(pattern[1:], text)
    for start in range(len(text) + 1):
        if match_here(pattern, text[start:]):
            return True
    return False


def match_here(pattern, text):
    if not pattern:
        return True
    if pattern == "$":
        return not text
    if len(pattern) >= 2 and pattern[1] in "*+?":
        ch = pattern[0]
        rest = pattern[2:]
        if pattern[1] == "*":
            return match_star(ch, rest, text)
        if pattern[1] == "+":
            return bool(text) and first_matches(ch, text) and match_star(ch, rest, text[1:])
        if first_matches(ch, text):
            return match_here(rest, text[1:])
        return match_here(rest, text)
    if first_matches(pattern[0], text):
        return match_here(pattern[1:], text[1:])
    return False


def first_matches(ch, text):
    return bool(text) and (ch == "." or text[0] == ch)


def match_star(ch, rest, text):
    i = 0
    while True:
        if match_here(rest, text[i:]):
            return True
        if i < len(text) and (ch == "." or text[i] == ch):
            i += 1
        else:
            return False


def find_all(pattern, text):
    """Start offsets where the anchored pattern begins to match."""
    body = pattern.lstrip("^")
    hits = []
    for start in range(len(text) + 1):
        if match_here(body, text[start:]):
            hits.append(start)
    return hits


def replace_first(pattern, text, replacement):
    for start in range(len(text) + 1):
        for end in range(len(text), start - 1, -1):
            if match("^" + pattern + "$", text[start:end]):
                return text[:start] + replacement + text[end:]
    return text
