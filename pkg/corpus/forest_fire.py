"""Cellular fire-spread simulation on a tree grid."""

EMPTY, TREE, BURNING = 0, 1, 2


def ignite(grid, row, col):
    out = [list(r) for r in grid]
    if out[row][col] == TREE:
        out[row][col] = BURNING
    return out


def step(grid):
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    out = [[EMPTY] * cols for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            cell = grid[r][c]
            if cell == BURNING:
                out[r][c] = EMPTY
            elif cell == TREE:
                burning_neighbor = False
                for dr, dc in [(-1, 0), (1, 0), (0, -1), (0, 1)]:
                    rr, cc = r + dr, c + dc
                    if 0 <= rr < rows and 0 <= cc < cols and grid[rr][cc] == BURNING:
                        burning_neighbor = True
                        break
                out[r][c] = BURNING if burning_neighbor else TREE
    return out


def run_until_out(grid, max_steps=500):
    history = [grid]
    current = grid
    for _ in range(max_steps):
        if not any(BURNING in row for row in current):
            break
        current = step(current)
        history.append(current)
    return history


def survival_rate(initial, final):
    before = sum(row.count(TREE) for row in initial)
    after = sum(row.count(TREE) for row in final)
    if before == 0:
        return 1.0
    return after / before
