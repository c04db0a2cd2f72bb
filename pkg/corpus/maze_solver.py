"""Shortest path through an ASCII maze."""

WALL = "#"
OPEN_CHARS = " .SE"


def parse_maze(text):
    grid = [list(line) for line in text.splitlines() if line]
    start = goal = None
    for r, row in enumerate(grid):
        for c, cell in enumerate(row):
            if cell == "S":
                start = r, c
            elif cell == "E":
                goal = r, c
    if start is None or goal is None:
        raise ValueError("maze needs S and E markers")
    return grid, start, goal


def passable(grid, cell):
    r, c = cell
    if r < 0 or c < 0 or r >= len(grid) or c >= len(grid[r]):
        return False
    return grid[r][c] in OPEN_CHARS


def solve(text):
    grid, start, goal = parse_maze(text)
    frontier = [start]
    parents = {start: None}
    while frontier:
        next_frontier = []
        for cell in frontier:
            if cell == goal:
                path = []
                cursor = cell
                while cursor is not None:
                    path.append(cursor)
                    cursor = parents[cursor]
                path.reverse()
                return path
            r, c = cell
            for neighbor in [(r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)]:
                if neighbor not in parents and passable(grid, neighbor):
                    parents[neighbor] = cell
                    next_frontier.append(neighbor)
        frontier = next_frontier
    return []


def render_solution(text, path):
    grid, start, goal = parse_maze(text)
    for r, c in path:
        if (r, c) != start and (r, c) != goal:
            grid[r][c] = "*"
    return "\n".join("".join(row) for row in grid)
