"""Compact bit set backed by a single integer."""


class BitSet:
    def __init__(self, bits=0):
        self.bits = bits

    def add(self, index):
        self.bits |= 1 << index

    def discard(self, index):
        self.bits &= ~(1 << index)

    def has(self, index):
        return self.bits >> index & 1 == 1

    def toggle(self, index):
        self.bits ^= 1 << index

    def count(self):
        total = 0
        value = self.bits
        while value:
            value &= value - 1
            total += 1
        return total

    def union(self, other):
        return BitSet(self.bits | other.bits)

    def intersection(self, other):
        return BitSet(self.bits & other.bits)

    def members(self):
        out = []
        value = self.bits
        index = 0
        while value:
            if value & 1:
                out.append(index)
            value >>= 1
            index += 1
        return out


def from_members(indices):
    bs = BitSet()
    for i in indices:
        bs.add(i)
    return bs
