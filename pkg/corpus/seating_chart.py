"""Assigning guests to tables with adjacency preferences."""


def pair_score(a, b, prefers, avoids):
    if (a, b) in avoids or (b, a) in avoids:
        return -10
    if (a, b) in prefers or (b, a) in prefers:
        return 5
    return 0


def table_score(table, prefers, avoids):
    total = 0
    for i, guest in enumerate(table):
        for other in table[i + 1:]:
            total += pair_score(guest, other, prefers, avoids)
    return total


def assign_greedy(guests, table_size, prefers=None, avoids=None):
    prefers = prefers or set()
    avoids = avoids or set()
    tables = []
    for guest in sorted(guests):
        best_table = None
        best_gain = None
        for table in tables:
            if len(table) >= table_size:
                continue
            gain = sum(pair_score(guest, other, prefers, avoids) for other in table)
            if best_gain is None or gain > best_gain:
                best_table = table
                best_gain = gain
        if best_table is None or best_gain is not None and best_gain < 0 and len(tables) * table_size < len(guests) + table_size:
            tables.append([guest])
        else:
            best_table.append(guest)
    return tables


def total_score(tables, prefers, avoids):
    return sum(table_score(t, prefers, avoids) for t in tables)
