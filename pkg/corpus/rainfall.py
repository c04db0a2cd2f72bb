"""Trapped rainwater over elevation maps."""


def trapped(heights):
    if len(heights) < 3:
        return 0
    left_max = [0] * len(heights)
    right_max = [0] * len(heights)
    peak = 0
    for i, h in enumerate(heights):
        peak = max(peak, h)
        left_max[i] = peak
    peak = 0
    for i in range(len(heights) - 1, -1, -1):
        peak = max(peak, heights[i])
        right_max[i] = peak
    total = 0
    for i, h in enumerate(heights):
        total += min(left_max[i], right_max[i]) - h
    return total


def wettest_cell(heights):
    best = -1
    best_depth = 0
    left = 0
    for i, h in enumerate(heights):
        right = max(heights[i:], default=0)
        depth = min(left, right) - h
        if depth > best_depth:
            best = i
            best_depth = depth
        left = max(left, h)
    return best, best_depth
