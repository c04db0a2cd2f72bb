"""Fibonacci helpers: iterative, memoized, and matrix forms."""

from functools import lru_cache


def fib_iter(n):
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def fib_memo(n):
    if n < 2:
        return n
    return fib_memo(n - 1) + fib_memo(n - 2)


def mat_mul(m1, m2):
    a = m1[0] * m2[0] + m1[1] * m2[2]
    b = m1[0] * m2[1] + m1[1] * m2[3]
    c = m1[2] * m2[0] + m1[3] * m2[2]
    d = m1[2] * m2[1] + m1[3] * m2[3]
    return a, b, c, d


def fib_matrix(n):
    result = 1, 0, 0, 1
    base = 1, 1, 1, 0
    power = n
    while power:
        if power & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        power >>= 1
    return result[1]


def fibs_upto(limit):
    out = []
    a, b = 0, 1
    while a <= limit:
        out.append(a)
        a, b = b, a + b
    return out


def is_fib(value):
    for candidate in fibs_upto(value):
        if candidate == value:
            return True
    return False
