"""Numeric quadrature rules."""


def midpoint(fn, a, b, steps=1000):
    width = (b - a) / steps
    total = 0.0
    for i in range(steps):
        total += fn(a + (i + 0.5) * width)
    return total * width


def trapezoid(fn, a, b, steps=1000):
    width = (b - a) / steps
    total = (fn(a) + fn(b)) / 2
    for i in range(1, steps):
        total += fn(a + i * width)
    return total * width


def simpson(fn, a, b, steps=1000):
    if steps % 2:
        steps += 1
    width = (b - a) / steps
    total = fn(a) + fn(b)
    for i in range(1, steps):
        factor = 4 if i % 2 else 2
        total += factor * fn(a + i * width)
    return total * width / 3


def adaptive(fn, a, b, tolerance=1e-8, depth=20):
    whole = simpson(fn, a, b, steps=2)

    def recurse(lo, hi, estimate, tol, remaining):
        mid = (lo + hi) / 2
        left = simpson(fn, lo, mid, steps=2)
        right = simpson(fn, mid, hi, steps=2)
        if remaining <= 0 or abs(left + right - estimate) < 15 * tol:
            return left + right
        return recurse(lo, mid, left, tol / 2, remaining - 1) + recurse(mid, hi, right, tol / 2, remaining - 1)

    return recurse(a, b, whole, tolerance, depth)


def average_value(fn, a, b, steps=1000):
    if a == b:
        return fn(a)
    return trapezoid(fn, a, b, steps) / (b - a)
