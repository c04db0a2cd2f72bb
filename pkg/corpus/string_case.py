"""Identifier case conversions: snake, camel, kebab, title."""


def split_words(identifier):
    words = []
    current = []
    previous_lower = False
    for ch in identifier:
        if ch in "-_ ":
            if current:
                words.append("".join(current))
                current = []
            previous_lower = False
            continue
        if ch.isupper() and previous_lower:
            words.append("".join(current))
            current = [ch]
        else:
            current.append(ch)
        previous_lower = ch.islower() or ch.isdigit()
    if current:
        words.append("".join(current))
    return [w.lower() for w in words if w]


def to_snake(identifier):
    return "_".join(split_words(identifier))


def to_kebab(identifier):
    return "-".join(split_words(identifier))


def to_camel(identifier):
    words = split_words(identifier)
    if not words:
        return ""
    return words[0] + "".join(w.capitalize() for w in words[1:])


def to_pascal(identifier):
    return "".join(w.capitalize() for w in split_words(identifier))


def to_title(identifier):
    minor = {"a", "an", "the", "of", "in", "on", "and", "or"}
    words = split_words(identifier)
    out = []
    for i, w in enumerate(words):
        if i and w in minor:
            out.append(w)
        else:
            out.append(w.capitalize())
    return " ".join(out)


def detect_case(identifier):
    if "_" in identifier:
        return "snake"
    if "-" in identifier:
        return "kebab"
    if identifier[:1].isupper():
        return "pascal"
    if any(ch.isupper() for ch in identifier):
        return "camel"
    return "lower"
