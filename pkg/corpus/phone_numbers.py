"""Normalizing and validating North-American-style phone numbers."""


def digits_only(text):
    return "".join(ch for ch in text if ch.isdigit())


def normalize(text):
    digits = digits_only(text)
    if len(digits) == 11 and digits.startswith("1"):
        digits = digits[1:]
    if len(digits) != 10:
        raise ValueError(f"expected 10 digits, got {len(digits)}")
    return digits


def is_valid(text):
    try:
        digits = normalize(text)
    except ValueError:
        return False
    if digits[0] in "01" or digits[3] in "01":
        return False
    return True


def format_pretty(text):
    digits = normalize(text)
    area = digits[:3]
    exchange = digits[3:6]
    line = digits[6:]
    return f"({area}) {exchange}-{line}"


def mask(text, visible=4):
    digits = normalize(text)
    hidden = len(digits) - visible
    return "*" * hidden + digits[hidden:]


def share_area_code(numbers):
    groups = {}
    for number in numbers:
        if is_valid(number):
            area = normalize(number)[:3]
            groups.setdefault(area, []).append(number)
    return {area: members for area, members in groups.items() if len(members) > 1}
