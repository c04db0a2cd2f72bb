"""Reader-writer bookkeeping with context-manager helpers."""


class LockViolation(Exception):
    pass


class RwState:
    def __init__(self):
        self.readers = set()
        self.writer = None

    def acquire_read(self, who):
        if self.writer is not None and self.writer != who:
            raise LockViolation(f"{who} blocked by writer {self.writer}")
        self.readers.add(who)

    def release_read(self, who):
        self.readers.discard(who)

    def acquire_write(self, who):
        others = self.readers - {who}
        if others:
            raise LockViolation(f"{who} blocked by readers {sorted(others)}")
        if self.writer is not None and self.writer != who:
            raise LockViolation(f"{who} blocked by writer {self.writer}")
        self.writer = who

    def release_write(self, who):
        if self.writer == who:
            self.writer = None


class ReadLock:
    def __init__(self, state, who):
        self.state = state
        self.who = who

    def __enter__(self):
        self.state.acquire_read(self.who)
        return self

    def __exit__(self, exc_type, exc, tb):
        self.state.release_read(self.who)
        return False


class WriteLock:
    def __init__(self, state, who):
        self.state = state
        self.who = who

    def __enter__(self):
        self.state.acquire_write(self.who)
        return self

    def __exit__(self, exc_type, exc, tb):
        self.state.release_write(self.who)
        return False


def guarded_update(state, who, store, key, value):
    with WriteLock(state, who):
        store[key] = value
    return store


def guarded_reads(state, names, store):
    seen = {}
    for who in names:
        with ReadLock(state, who):
            seen[who] = dict(store)
    return seen
