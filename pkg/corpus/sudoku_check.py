"""Validating and partially solving 9x9 sudoku grids."""

SIZE = 9
BOX = 3


def rows(grid):
    return [list(row) for row in grid]


def cols(grid):
    return [[grid[r][c] for r in range(SIZE)] for c in range(SIZE)]


def boxes(grid):
    out = []
    for br in range(0, SIZE, BOX):
        for bc in range(0, SIZE, BOX):
            box = []
            for r in range(br, br + BOX):
                for c in range(bc, bc + BOX):
                    box.append(grid[r][c])
            out.append(box)
    return out


def group_ok(group):
    filled = [v for v in group if v]
    return len(filled) == len(set(filled))


def is_valid(grid):
    groups = rows(grid) + cols(grid) + boxes(grid)
    return all(group_ok(g) for g in groups)


def candidates(grid, row, col):
    if grid[row][col]:
        return set()
    used = set(grid[row]) | {grid[r][col] for r in range(SIZE)}
    br = row // BOX * BOX
    bc = col // BOX * BOX
    for r in range(br, br + BOX):
        for c in range(bc, bc + BOX):
            used.add(grid[r][c])
    return {v for v in range(1, 10)} - used


def fill_singles(grid):
    """Repeatedly place cells that have exactly one candidate."""
    work = [list(row) for row in grid]
    progress = True
    placed = 0
    while progress:
        progress = False
        for r in range(SIZE):
            for c in range(SIZE):
                if work[r][c]:
                    continue
                options = candidates(work, r, c)
                if len(options) == 1:
                    work[r][c] = options.pop()
                    placed += 1
                    progress = True
    return work, placed


def completion(grid):
    filled = sum(1 for row in grid for v in row if v)
    return filled / (SIZE * SIZE)
