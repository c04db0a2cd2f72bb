"""Detecting repeated substring patterns."""


def repeating_unit(text):
    for size in range(1, len(text) // 2 + 1):
        if len(text) % size == 0:
            if text[:size] * (len(text) // size) == text:
                return text[:size]
    return text


def is_repeating(text):
    return repeating_unit(text) != text
