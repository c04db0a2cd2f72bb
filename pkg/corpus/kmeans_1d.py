"""One-dimensional k-means with deterministic initialization."""


def initialize(values, k):
    ordered = sorted(values)
    if k <= 0 or k > len(ordered):
        raise ValueError("invalid cluster count")
    step = len(ordered) // k
    return [ordered[min(i * step, len(ordered) - 1)] for i in range(k)]


def assign(values, centers):
    buckets = [[] for _ in centers]
    for v in values:
        best = 0
        best_dist = abs(v - centers[0])
        for i, c in enumerate(centers[1:], start=1):
            d = abs(v - c)
            if d < best_dist:
                best = i
                best_dist = d
        buckets[best].append(v)
    return buckets


def recenter(buckets, old_centers):
    centers = []
    for bucket, old in zip(buckets, old_centers):
        if bucket:
            centers.append(sum(bucket) / len(bucket))
        else:
            centers.append(old)
    return centers


def cluster(values, k, max_rounds=100):
    centers = initialize(values, k)
    for _ in range(max_rounds):
        buckets = assign(values, centers)
        updated = recenter(buckets, centers)
        if all(abs(a - b) < 1e-12 for a, b in zip(centers, updated)):
            break
        centers = updated
    return centers, assign(values, centers)


def inertia(values, centers):
    total = 0.0
    for v in values:
        total += min((v - c) ** 2 for c in centers)
    return total
