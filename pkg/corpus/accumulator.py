"""Running aggregates over streams of numbers."""


class RunningStats:
    """Welford-style online mean and variance."""

    def __init__(self):
        self.count = 0
        self.mean = 0.0
        self.m2 = 0.0
        self.minimum = None
        self.maximum = None

    def update(self, value):
        self.count += 1
        delta = value - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (value - self.mean)
        if self.minimum is None or value < self.minimum:
            self.minimum = value
        if self.maximum is None or value > self.maximum:
            self.maximum = value

    def variance(self):
        if self.count < 2:
            return 0.0
        return self.m2 / (self.count - 1)

    def merge(self, other):
        combined = RunningStats()
        combined.count = self.count + other.count
        if combined.count == 0:
            return combined
        delta = other.mean - self.mean
        combined.mean = self.mean + delta * other.count / combined.count
        combined.m2 = self.m2 + other.m2 + delta ** 2 * self.count * other.count / combined.count
        mins = [m for m in [self.minimum, other.minimum] if m is not None]
        maxs = [m for m in [self.maximum, other.maximum] if m is not None]
        combined.minimum = min(mins) if mins else None
        combined.maximum = max(maxs) if maxs else None
        return combined


def summarize(values):
    stats = RunningStats()
    for v in values:
        stats.update(v)
    return stats
