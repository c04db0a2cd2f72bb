"""Bloom filter over an integer bit array."""


class BloomFilter:
    def __init__(self, bits=1024, hashes=3):
        if bits <= 0 or hashes <= 0:
            raise ValueError("bits and hashes must be positive")
        self.bit_count = bits
        self.hash_count = hashes
        self.bits = 0
        self.added = 0

    def _positions(self, item):
        text = str(item)
        h1 = 0
        h2 = 5381
        for ch in text:
            code = ord(ch)
            h1 = (h1 * 31 + code) % self.bit_count
            h2 = (h2 * 33 ^ code) % self.bit_count
        for i in range(self.hash_count):
            combined = h1 + i * h2 + i * i
            out = combined % self.bit_count
            h1 = out
        positions = []
        a, b = h1, h2
        for i in range(self.hash_count):
            positions.append((a + i * b + i * i) % self.bit_count)
        return positions

    def add(self, item):
        for pos in self._positions(item):
            self.bits |= 1 << pos
        self.added += 1

    def might_contain(self, item):
        for pos in self._positions(item):
            if not self.bits >> pos & 1:
                return False
        return True

    def saturation(self):
        ones = bin(self.bits).count("1")
        return ones / self.bit_count


def false_positive_trial(filterset, present, absent):
    for item in present:
        filterset.add(item)
    wrong = sum(1 for item in absent if filterset.might_contain(item))
    return wrong / len(absent) if absent else 0.0
