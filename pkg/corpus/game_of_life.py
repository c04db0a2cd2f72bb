"""Conway's life on a set of live cells."""


def neighbors(cell):
    row, col = cell
    out = []
    for dr in [-1, 0, 1]:
        for dc in [-1, 0, 1]:
            if dr or dc:
                out.append((row + dr, col + dc))
    return out


def step(live):
    counts = {}
    for cell in live:
        for n in neighbors(cell):
            counts[n] = counts.get(n, 0) + 1
    next_gen = set()
    for cell, count in counts.items():
        if count == 3 or count == 2 and cell in live:
            next_gen.add(cell)
    return next_gen


def run(live, generations):
    history = [set(live)]
    current = set(live)
    for _ in range(generations):
        current = step(current)
        history.append(set(current))
    return history


def is_still_life(live):
    return step(live) == set(live)


def period(live, limit=20):
    seen = {frozenset(live): 0}
    current = set(live)
    for gen in range(1, limit + 1):
        current = step(current)
        key = frozenset(current)
        if key in seen:
            return gen - seen[key]
        seen[key] = gen
    return 0


def bounding_box(live):
    if not live:
        return 0, 0, 0, 0
    rows = [r for r, _ in live]
    cols = [c for _, c in live]
    return min(rows), min(cols), max(rows), max(cols)
