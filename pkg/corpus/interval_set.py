"""Merging and querying half-open integer intervals."""


def normalize(intervals):
    """Sort and merge overlapping or touching intervals."""
    merged = []
    for start, end in sorted(intervals):
        if start >= end:
            continue
        if merged and start <= merged[-1][1]:
            last_start, last_end = merged[-1]
            merged[-1] = last_start, max(last_end, end)
        else:
            merged.append((start, end))
    return merged


def total_length(intervals):
    return sum(end - start for start, end in normalize(intervals))


def contains_point(intervals, point):
    for start, end in normalize(intervals):
        if start <= point < end:
            return True
    return False


def invert(intervals, universe):
    """Gaps within the universe interval not covered by the input."""
    lo, hi = universe
    gaps = []
    cursor = lo
    for start, end in normalize(intervals):
        if start > cursor:
            gaps.append((cursor, min(start, hi)))
        cursor = max(cursor, end)
        if cursor >= hi:
            break
    if cursor < hi:
        gaps.append((cursor, hi))
    return [g for g in gaps if g[0] < g[1]]


def intersect(a, b):
    result = []
    for a_start, a_end in normalize(a):
        for b_start, b_end in normalize(b):
            lo = max(a_start, b_start)
            hi = min(a_end, b_end)
            if lo < hi:
                result.append((lo, hi))
    return normalize(result)
