"""Fixed-capacity ring buffer that overwrites the oldest entries."""


class RingBuffer:
    def __init__(self, capacity):
        if capacity <= 0:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self.items = [None] * capacity
        self.start = 0
        self.count = 0

    def push(self, value):
        index = (self.start + self.count) % self.capacity
        self.items[index] = value
        if self.count < self.capacity:
            self.count += 1
        else:
            self.start = (self.start + 1) % self.capacity

    def pop_oldest(self):
        if self.count == 0:
            raise IndexError("buffer is empty")
        value = self.items[self.start]
        self.items[self.start] = None
        self.start = (self.start + 1) % self.capacity
        self.count -= 1
        return value

    def newest(self):
        if self.count == 0:
            raise IndexError("buffer is empty")
        return self.items[(self.start + self.count - 1) % self.capacity]

    def snapshot(self):
        out = []
        for offset in range(self.count):
            out.append(self.items[(self.start + offset) % self.capacity])
        return out

    def is_full(self):
        return self.count == self.capacity


def sliding_windows(values, size):
    buf = RingBuffer(size)
    windows = []
    for v in values:
        buf.push(v)
        if buf.is_full():
            windows.append(buf.snapshot())
    return windows
