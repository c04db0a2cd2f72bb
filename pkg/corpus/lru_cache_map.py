"""Least-recently-used cache built on an ordered dict."""

from collections import OrderedDict


class LruCache:
    def __init__(self, capacity=16):
        self.capacity = capacity
        self.entries = OrderedDict()
        self.hits = 0
        self.misses = 0

    def get(self, key, default=None):
        if key in self.entries:
            self.entries.move_to_end(key)
            self.hits += 1
            return self.entries[key]
        self.misses += 1
        return default

    def put(self, key, value):
        if key in self.entries:
            self.entries.move_to_end(key)
        self.entries[key] = value
        while len(self.entries) > self.capacity:
            self.entries.popitem(last=False)

    def hit_rate(self):
        total = self.hits + self.misses
        if total == 0:
            return 0.0
        return self.hits / total


def memoized(fn, cache=None):
    store = cache if cache is not None else LruCache(64)

    def wrapper(arg):
        missing = object()
        value = store.get(arg, missing)
        if value is missing:
            value = fn(arg)
            store.put(arg, value)
        return value

    return wrapper
