"""Luhn checksum for card-like identifiers."""


def luhn_sum(digits):
    total = 0
    for i, ch in enumerate(reversed(digits)):
        value = int(ch)
        if i % 2 == 1:
            value *= 2
            if value > 9:
                value -= 9
        total += value
    return total


def is_valid(number):
    digits = "".join(ch for ch in str(number) if ch.isdigit())
    if len(digits) < 2:
        return False
    return luhn_sum(digits) % 10 == 0


def check_digit(partial):
    digits = "".join(ch for ch in str(partial) if ch.isdigit())
    total = luhn_sum(digits + "0")
    return (10 - total % 10) % 10


def complete(partial):
    return str(partial) + str(check_digit(partial))


def issuer(number):
    digits = "".join(ch for ch in str(number) if ch.isdigit())
    if digits.startswith("4"):
        return "visa-like"
    if digits[:2] in ("51", "52", "53", "54", "55"):
        return "mastercard-like"
    if digits[:2] in ("34", "37"):
        return "amex-like"
    return "unknown"
