"""Deterministic level assignment logic used by skip lists."""


def level_for_index(index, max_level=8):
    """Level equals the number of trailing zero bits, capped."""
    if index <= 0:
        return max_level
    level = 1
    while index % 2 == 0 and level < max_level:
        index //= 2
        level += 1
    return level


def level_histogram(count, max_level=8):
    hist = {}
    for i in range(1, count + 1):
        level = level_for_index(i, max_level)
        hist[level] = hist.get(level, 0) + 1
    return hist


def expected_steps(count, max_level=8):
    """Rough search cost estimate: levels plus average span."""
    if count == 0:
        return 0.0
    hist = level_histogram(count, max_level)
    levels = len(hist)
    top_width = hist.get(max(hist), 1)
    return levels + count / max(1, top_width * 2)


class Lane:
    def __init__(self, level):
        self.level = level
        self.keys = []

    def insert(self, key):
        lo = 0
        hi = len(self.keys)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.keys[mid] < key:
                lo = mid + 1
            else:
                hi = mid
        self.keys.insert(lo, key)


def build_lanes(keys, max_level=4):
    lanes = [Lane(level) for level in range(1, max_level + 1)]
    for i, key in enumerate(sorted(keys), start=1):
        for lane in lanes[:level_for_index(i, max_level)]:
            lane.insert(key)
    return lanes
