"""Counting staircase climbs with variable step sizes."""


def count_paths(steps, strides=(1, 2)):
    table = [0] * (steps + 1)
    table[0] = 1
    for target in range(1, steps + 1):
        for stride in strides:
            if stride <= target:
                table[target] += table[target - stride]
    return table[steps]


def enumerate_paths(steps, strides=(1, 2), limit=100):
    paths = []

    def walk(remaining, trail):
        if len(paths) >= limit:
            return
        if remaining == 0:
            paths.append(list(trail))
            return
        for stride in strides:
            if stride <= remaining:
                trail.append(stride)
                walk(remaining - stride, trail)
                trail.pop()

    walk(steps, [])
    return paths


def min_cost_climb(costs):
    a = b = 0
    for cost in costs:
        a, b = b, min(a, b) + cost
    return min(a, b)
