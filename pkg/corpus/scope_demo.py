"""Counter factories exercising closure scopes."""

calls = 0


def make_counter(start=0):
    count = start

    def bump(step=1):
        nonlocal count
        count += step
        return count

    def peek():
        return count

    return bump, peek


def track_global():
    global calls
    calls += 1
    return calls


def make_accumulator():
    totals = {"sum": 0, "n": 0}

    def add(value):
        totals["sum"] += value
        totals["n"] += 1
        return totals["sum"]

    def average():
        if totals["n"] == 0:
            return 0.0
        return totals["sum"] / totals["n"]

    return add, average


def chained_counters(count, start=0):
    counters = []
    for i in range(count):
        bump, peek = make_counter(start + i * 10)
        counters.append((bump, peek))
    return counters


def exercise():
    bump, peek = make_counter(5)
    bump()
    bump(2)
    add, average = make_accumulator()
    add(10)
    add(20)
    return peek(), average(), track_global()
