"""Rational arithmetic without the standard library class."""


def gcd(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


def reduce(num, den):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num = -num
        den = -den
    g = gcd(num, den)
    if g == 0:
        return 0, 1
    return num // g, den // g


def add(a, b):
    num = a[0] * b[1] + b[0] * a[1]
    den = a[1] * b[1]
    return reduce(num, den)


def mul(a, b):
    return reduce(a[0] * b[0], a[1] * b[1])


def compare(a, b):
    left = a[0] * b[1]
    right = b[0] * a[1]
    if left < right:
        return -1
    if left > right:
        return 1
    return 0


def to_float(frac):
    return frac[0] / frac[1]


def approximate(value, max_den=100):
    """Best rational approximation with a bounded denominator."""
    best = reduce(0, 1)
    best_err = abs(value)
    for den in range(1, max_den + 1):
        num = round(value * den)
        err = abs(value - num / den)
        if err < best_err:
            best = reduce(num, den)
            best_err = err
    return best
