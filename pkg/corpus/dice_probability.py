"""Exact dice-roll distributions via convolution."""


def single_die(sides=6):
    weight = 1.0 / sides
    return {face: weight for face in range(1, sides + 1)}


def convolve(dist_a, dist_b):
    out = {}
    for a, pa in dist_a.items():
        for b, pb in dist_b.items():
            total = a + b
            out[total] = out.get(total, 0.0) + pa * pb
    return out


def roll_distribution(count, sides=6):
    if count < 1:
        raise ValueError("need at least one die")
    dist = single_die(sides)
    for _ in range(count - 1):
        dist = convolve(dist, single_die(sides))
    return dist


def probability_at_least(count, sides, target):
    dist = roll_distribution(count, sides)
    return sum(p for total, p in dist.items() if total >= target)


def expected_value(dist):
    return sum(value * p for value, p in dist.items())


def mode(dist):
    best_value = None
    best_p = -1.0
    for value in sorted(dist):
        if dist[value] > best_p:
            best_value = value
            best_p = dist[value]
    return best_value
