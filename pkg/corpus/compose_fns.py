"""Function composition and small combinators."""

from functools import reduce


def compose(*fns):
    """compose(f, g, h)(x) == f(g(h(x)))."""

    def composed(value):
        for fn in reversed(fns):
            value = fn(value)
        return value

    return composed


def pipe(value, *fns):
    for fn in fns:
        value = fn(value)
    return value


def curry2(fn):
    def outer(a):
        def inner(b):
            return fn(a, b)

        return inner

    return outer


def flip(fn):
    def flipped(a, b):
        return fn(b, a)

    return flipped


def fold(fn, items, initial):
    return reduce(fn, items, initial)


def juxt(*fns):
    def applied(value):
        return [fn(value) for fn in fns]

    return applied


def const(value):
    def constant(*args, **kwargs):
        return value

    return constant
