"""Dictionary-backed sparse 2D grid."""


class SparseGrid:
    def __init__(self, default=0):
        self.cells = {}
        self.default = default

    def get(self, row, col):
        return self.cells.get((row, col), self.default)

    def set(self, row, col, value):
        if value == self.default:
            self.cells.pop((row, col), None)
        else:
            self.cells[row, col] = value

    def bounds(self):
        if not self.cells:
            return 0, 0, 0, 0
        rows = [r for r, _ in self.cells]
        cols = [c for _, c in self.cells]
        return min(rows), min(cols), max(rows), max(cols)

    def neighbors(self, row, col):
        offsets = [(-1, 0), (1, 0), (0, -1), (0, 1)]
        return [self.get(row + dr, col + dc) for dr, dc in offsets]

    def dense(self):
        top, left, bottom, right = self.bounds()
        out = []
        for r in range(top, bottom + 1):
            out.append([self.get(r, c) for c in range(left, right + 1)])
        return out


def count_live_neighbors(grid, row, col):
    total = 0
    for dr in [-1, 0, 1]:
        for dc in [-1, 0, 1]:
            if dr == 0 and dc == 0:
                continue
            if grid.get(row + dr, col + dc):
                total += 1
    return total
