"""Digit-level integer operations."""


def digits(n):
    return [int(ch) for ch in str(abs(n))]


def digital_root(n):
    while n >= 10:
        n = sum(digits(n))
    return n


def is_harshad(n):
    return n % sum(digits(n)) == 0
