"""Soundex phonetic codes for fuzzy name matching."""

CODES = {
    "b": "1", "f": "1", "p": "1", "v": "1",
    "c": "2", "g": "2", "j": "2", "k": "2", "q": "2", "s": "2", "x": "2", "z": "2",
    "d": "3", "t": "3",
    "l": "4",
    "m": "5", "n": "5",
    "r": "6"
}


def soundex(name):
    cleaned = [ch for ch in name.lower() if ch.isalpha()]
    if not cleaned:
        return "0000"
    first = cleaned[0]
    digits = [CODES.get(first, "")]
    for ch in cleaned[1:]:
        code = CODES.get(ch, "")
        if code and code != digits[-1]:
            digits.append(code)
        elif not code and ch not in "hw":
            digits.append("")
    tail = "".join(d for d in digits[1:] if d)
    return (first.upper() + tail + "000")[:4]


def same_sound(a, b):
    return soundex(a) == soundex(b)


def group_names(names):
    groups = {}
    for name in names:
        groups.setdefault(soundex(name), []).append(name)
    return {code: sorted(members) for code, members in groups.items()}


def closest_sounding(target, names):
    code = soundex(target)
    matches = [n for n in names if soundex(n) == code]
    if matches:
        return matches[0]
    return None
