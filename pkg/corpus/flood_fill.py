"""Region filling and labeling on pixel grids."""


def fill(grid, row, col, new_value):
    """Iterative four-way flood fill; returns cells changed."""
    if not grid or not grid[0]:
        return 0
    rows = len(grid)
    cols = len(grid[0])
    if row < 0 or col < 0 or row >= rows or col >= cols:
        raise IndexError("start outside grid")
    old_value = grid[row][col]
    if old_value == new_value:
        return 0
    stack = [(row, col)]
    changed = 0
    while stack:
        r, c = stack.pop()
        if r < 0 or c < 0 or r >= rows or c >= cols:
            continue
        if grid[r][c] != old_value:
            continue
        grid[r][c] = new_value
        changed += 1
        stack.extend([(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)])
    return changed


def label_regions(grid):
    rows = len(grid)
    cols = len(grid[0]) if rows else 0
    labels = [[0] * cols for _ in range(rows)]
    next_label = 0
    sizes = {}
    for r in range(rows):
        for c in range(cols):
            if grid[r][c] and not labels[r][c]:
                next_label += 1
                stack = [(r, c)]
                count = 0
                while stack:
                    rr, cc = stack.pop()
                    if rr < 0 or cc < 0 or rr >= rows or cc >= cols:
                        continue
                    if not grid[rr][cc] or labels[rr][cc]:
                        continue
                    labels[rr][cc] = next_label
                    count += 1
                    stack.extend([(rr - 1, cc), (rr + 1, cc), (rr, cc - 1), (rr, cc + 1)])
                sizes[next_label] = count
    return labels, sizes


def largest_region(grid):
    _, sizes = label_regions(grid)
    if not sizes:
        return 0
    return max(sizes.values())
