"""Conversion between integers and Roman numerals."""

VALUES = [
    (1000, "M"), (900, "CM"), (500, "D"), (400, "CD"),
    (100, "C"), (90, "XC"), (50, "L"), (40, "XL"),
    (10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I")
]
DIGITS = {"I": 1, "V": 5, "X": 10, "L": 50, "C": 100, "D": 500, "M": 1000}


def to_roman(number):
    if number <= 0 or number >= 4000:
        raise ValueError("number out of range for Roman numerals")
    parts = []
    remaining = number
    for value, symbol in VALUES:
        while remaining >= value:
            parts.append(symbol)
            remaining -= value
    return "".join(parts)


def from_roman(text):
    total = 0
    prev = 0
    for ch in reversed(text.upper()):
        value = DIGITS[ch]
        if value < prev:
            total -= value
        else:
            total += value
            prev = value
    return total


def is_valid(text):
    try:
        return to_roman(from_roman(text)) == text.upper()
    except (KeyError, ValueError):
        return False
