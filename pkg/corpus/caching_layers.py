"""Two-tier cache with write-through and statistics."""


class TieredCache:
    def __init__(self, fast_capacity=8, slow_capacity=64):
        self.fast = {}
        self.slow = {}
        self.fast_capacity = fast_capacity
        self.slow_capacity = slow_capacity
        self.fast_order = []
        self.slow_order = []
        self.stats = {"fast_hits": 0, "slow_hits": 0, "misses": 0}

    def _touch(self, order, key):
        if key in order:
            order.remove(key)
        order.append(key)

    def _evict(self, store, order, capacity):
        while len(store) > capacity:
            oldest = order.pop(0)
            store.pop(oldest, None)

    def get(self, key):
        if key in self.fast:
            self.stats["fast_hits"] += 1
            self._touch(self.fast_order, key)
            return self.fast[key]
        if key in self.slow:
            self.stats["slow_hits"] += 1
            value = self.slow[key]
            self.put(key, value)
            return value
        self.stats["misses"] += 1
        return None

    def put(self, key, value):
        self.fast[key] = value
        self._touch(self.fast_order, key)
        self._evict(self.fast, self.fast_order, self.fast_capacity)
        self.slow[key] = value
        self._touch(self.slow_order, key)
        self._evict(self.slow, self.slow_order, self.slow_capacity)

    def hit_rate(self):
        total = sum(self.stats.values())
        if total == 0:
            return 0.0
        hits = self.stats["fast_hits"] + self.stats["slow_hits"]
        return hits / total


def warm(cache, pairs):
    for key, value in pairs:
        cache.put(key, value)
    return cache
