"""Reusable object pool with bounded creation."""


class PoolExhausted(Exception):
    pass


class Pool:
    def __init__(self, factory, max_size=4):
        self.factory = factory
        self.max_size = max_size
        self.available = []
        self.in_use = set()
        self.created = 0

    def acquire(self):
        if self.available:
            obj = self.available.pop()
        elif self.created < self.max_size:
            obj = self.factory()
            self.created += 1
        else:
            raise PoolExhausted(f"all {self.max_size} objects busy")
        self.in_use.add(id(obj))
        return obj

    def release(self, obj):
        marker = id(obj)
        if marker not in self.in_use:
            raise ValueError("object does not belong to this pool")
        self.in_use.remove(marker)
        self.available.append(obj)

    def stats(self):
        return {
            "created": self.created,
            "available": len(self.available),
            "busy": len(self.in_use)
        }


class Lease:
    """Context manager that returns the object on exit."""

    def __init__(self, pool):
        self.pool = pool
        self.obj = None

    def __enter__(self):
        self.obj = self.pool.acquire()
        return self.obj

    def __exit__(self, exc_type, exc, tb):
        self.pool.release(self.obj)
        return False


def with_pooled(pool, action):
    with Lease(pool) as obj:
        return action(obj)
