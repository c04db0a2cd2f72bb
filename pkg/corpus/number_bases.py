"""Converting integers between arbitrary bases."""

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"


def to_base(number, base):
    if base < 2 or base > len(DIGITS):
        raise ValueError(f"base {base} out of range")
    if number == 0:
        return "0"
    negative = number < 0
    number = abs(number)
    digits = []
    while number:
        number, rem = divmod(number, base)
        digits.append(DIGITS[rem])
    if negative:
        digits.append("-")
    return "".join(reversed(digits))


def from_base(text, base):
    text = text.strip().lower()
    negative = text.startswith("-")
    if negative:
        text = text[1:]
    value = 0
    for ch in text:
        digit = DIGITS.index(ch)
        if digit >= base:
            raise ValueError(f"digit {ch!r} invalid in base {base}")
        value = value * base + digit
    return -value if negative else value


def digit_sum(number, base=10):
    total = 0
    for ch in to_base(abs(number), base):
        if ch != "-":
            total += DIGITS.index(ch)
    return total


def is_base_palindrome(number, base):
    text = to_base(number, base)
    return text == text[::-1]
