"""Counting helpers exercising keyword-only and positional-only APIs."""


def clamp(value, /, lo=0, hi=100):
    return max(lo, min(hi, value))


def weighted_total(values, weights=None, *, normalize=False):
    if weights is None:
        weights = [1] * len(values)
    if len(values) != len(weights):
        raise ValueError("length mismatch")
    total = sum(v * w for v, w in zip(values, weights))
    if normalize:
        denom = sum(weights)
        return total / denom if denom else 0.0
    return total


def tally(items, *extra_groups, key=None, minimum=1):
    counts = {}
    groups = [items]
    groups.extend(extra_groups)
    for group in groups:
        for item in group:
            marker = key(item) if key else item
            counts[marker] = counts.get(marker, 0) + 1
    return {k: v for k, v in counts.items() if v >= minimum}


def running_totals(values, *, start=0):
    out = []
    acc = start
    for v in values:
        acc += v
        out.append(acc)
    return out


def top_and_rest(counts, n=3):
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], str(kv[0])))
    head = ranked[:n]
    rest = sum(v for _, v in ranked[n:])
    return head, rest
