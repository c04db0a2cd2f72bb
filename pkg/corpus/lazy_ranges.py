"""Generator-style sequence helpers built without yield."""


def take(count, items):
    out = []
    for item in items:
        if len(out) >= count:
            break
        out.append(item)
    return out


def drop(count, items):
    out = []
    for i, item in enumerate(items):
        if i >= count:
            out.append(item)
    return out


def take_while(predicate, items):
    out = []
    for item in items:
        if not predicate(item):
            break
        out.append(item)
    return out


def drop_while(predicate, items):
    out = []
    dropping = True
    for item in items:
        if dropping and predicate(item):
            continue
        dropping = False
        out.append(item)
    return out


def iterate(fn, start, times):
    """[start, fn(start), fn(fn(start)), ...] of the given length."""
    out = [start]
    value = start
    for _ in range(times - 1):
        value = fn(value)
        out.append(value)
    return out


def unfold(fn, seed, limit=1000):
    """Generate values until fn returns None."""
    out = []
    state = seed
    count = 0
    while count < limit:
        result = fn(state)
        if result is None:
            break
        value, state = result
        out.append(value)
        count += 1
    return out
