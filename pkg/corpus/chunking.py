"""Splitting iterables into chunks and windows."""


def chunks(items, size):
    if size <= 0:
        raise ValueError("chunk size must be positive")
    out = []
    current = []
    for item in items:
        current.append(item)
        if len(current) == size:
            out.append(current)
            current = []
    if current:
        out.append(current)
    return out


def windows(items, size, step=1):
    values = list(items)
    if size <= 0 or step <= 0:
        raise ValueError("size and step must be positive")
    out = []
    for start in range(0, max(0, len(values) - size + 1), step):
        out.append(values[start:start + size])
    return out


def pairwise(items):
    values = list(items)
    return list(zip(values, values[1:]))


def flatten(nested):
    out = []
    for group in nested:
        out.extend(group)
    return out


def partition(items, predicate):
    passed = []
    failed = []
    for item in items:
        if predicate(item):
            passed.append(item)
        else:
            failed.append(item)
    return passed, failed
