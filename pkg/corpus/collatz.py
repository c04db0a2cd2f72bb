"""Collatz sequence exploration."""


def step(n):
    if n % 2 == 0:
        return n // 2
    return 3 * n + 1


def sequence(start):
    if start < 1:
        raise ValueError("start must be positive")
    chain = [start]
    current = start
    while current != 1:
        current = step(current)
        chain.append(current)
    return chain


def stopping_time(start, cache=None):
    if cache is None:
        cache = {}
    if start in cache:
        return cache[start]
    current = start
    steps = 0
    path = []
    while current != 1 and current not in cache:
        path.append(current)
        current = step(current)
        steps += 1
    base = cache.get(current, 0)
    for i, value in enumerate(path):
        cache[value] = base + steps - i
    return cache.get(start, base)


def longest_below(limit):
    cache = {}
    best_start = 1
    best_steps = 0
    for start in range(1, limit):
        steps = stopping_time(start, cache)
        if steps > best_steps:
            best_start = start
            best_steps = steps
    return best_start, best_steps
