"""Token-bucket and fixed-window limiters with explicit clocks."""


class TokenBucket:
    def __init__(self, capacity, refill_per_second):
        self.capacity = capacity
        self.tokens = float(capacity)
        self.refill = refill_per_second
        self.last_time = 0.0

    def allow(self, now, cost=1.0):
        elapsed = max(0.0, now - self.last_time)
        self.last_time = now
        self.tokens = min(self.capacity, self.tokens + elapsed * self.refill)
        if self.tokens >= cost:
            self.tokens -= cost
            return True
        return False

    def wait_time(self, cost=1.0):
        if self.tokens >= cost:
            return 0.0
        if self.refill <= 0:
            raise ValueError("bucket never refills")
        return (cost - self.tokens) / self.refill


class FixedWindow:
    def __init__(self, limit, window_seconds=60):
        self.limit = limit
        self.window = window_seconds
        self.counts = {}

    def allow(self, now):
        slot = int(now // self.window)
        used = self.counts.get(slot, 0)
        if used >= self.limit:
            return False
        self.counts[slot] = used + 1
        for old in [s for s in self.counts if s < slot - 1]:
            del self.counts[old]
        return True


def drain_pattern(bucket, arrivals):
    """Which arrival times pass through the bucket."""
    accepted = []
    for t in arrivals:
        if bucket.allow(t):
            accepted.append(t)
    return accepted
