"""Grouping and indexing helpers for sequences of records."""


def group_by(items, key):
    groups = {}
    for item in items:
        groups.setdefault(key(item), []).append(item)
    return groups


def index_by(items, key):
    """Like group_by but expects unique keys."""
    out = {}
    for item in items:
        k = key(item)
        if k in out:
            raise KeyError(f"duplicate key {k!r}")
        out[k] = item
    return out


def count_by(items, key):
    counts = {}
    for item in items:
        k = key(item)
        counts[k] = counts.get(k, 0) + 1
    return counts


def dedupe(items, key=None):
    seen = set()
    out = []
    for item in items:
        marker = item if key is None else key(item)
        if marker not in seen:
            seen.add(marker)
            out.append(item)
    return out


def most_common_value(items, key):
    counts = count_by(items, key)
    best = None
    best_count = -1
    for value, count in sorted(counts.items(), key=lambda kv: str(kv[0])):
        if count > best_count:
            best = value
            best_count = count
    return best


def invert_index(groups):
    out = {}
    for key, members in groups.items():
        for member in members:
            out[member] = key
    return out
