"""Union-find with path compression and union by size."""


class DisjointSet:
    def __init__(self, items=None):
        self.parent = {}
        self.size = {}
        for item in items or []:
            self.add(item)

    def add(self, item):
        if item not in self.parent:
            self.parent[item] = item
            self.size[item] = 1

    def find(self, item):
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a, b):
        self.add(a)
        self.add(b)
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def groups(self):
        out = {}
        for item in self.parent:
            out.setdefault(self.find(item), []).append(item)
        return out


def connected_components(edges):
    ds = DisjointSet()
    for a, b in edges:
        ds.union(a, b)
    return sorted(sorted(group) for group in ds.groups().values())
