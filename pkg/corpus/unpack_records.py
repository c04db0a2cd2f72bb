"""Star-unpacking patterns over record tuples."""


def split_header(rows):
    if not rows:
        raise ValueError("no rows")
    header, *body = rows
    return header, body


def first_last(values):
    if len(values) < 2:
        raise ValueError("need at least two values")
    first, *middle, last = values
    return first, middle, last


def merge_defaults(defaults, overrides):
    return {**defaults, **overrides}


def expand_call(fn, positional, named):
    return fn(*positional, **named)


def rotate(values, by=1):
    if not values:
        return []
    by %= len(values)
    head = values[by:]
    tail = values[:by]
    return [*head, *tail]


def interleave(a, b):
    out = []
    for pair in zip(a, b):
        out.extend(pair)
    longer = a if len(a) > len(b) else b
    out.extend(longer[min(len(a), len(b)):])
    return out


def collect_stats(*samples, **labels):
    combined = [*samples]
    summary = {
        "count": len(combined),
        "total": sum(combined),
        **labels
    }
    if combined:
        summary["mean"] = summary["total"] / summary["count"]
    return summary
