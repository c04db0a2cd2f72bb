"""A small conversion table builder."""


def table(start, stop, step=10):
    rows = []
    for c in range(start, stop + 1, step):
        rows.append((c, c * 9 // 5 + 32))
    return rows
