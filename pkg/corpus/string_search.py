"""Substring search: naive, Rabin-Karp, and KMP."""

BASE = 257
MOD = 1000000007


def find_naive(text, pattern):
    if not pattern:
        return 0
    for i in range(len(text) - len(pattern) + 1):
        if text[i:i + len(pattern)] == pattern:
            return i
    return -1


def find_rabin_karp(text, pattern):
    m = len(pattern)
    n = len(text)
    if m == 0:
        return 0
    if m > n:
        return -1
    target = 0
    rolling = 0
    power = pow(BASE, m - 1, MOD)
    for i in range(m):
        target = (target * BASE + ord(pattern[i])) % MOD
        rolling = (rolling * BASE + ord(text[i])) % MOD
    for i in range(n - m + 1):
        if rolling == target and text[i:i + m] == pattern:
            return i
        if i + m < n:
            rolling = (rolling - ord(text[i]) * power) % MOD
            rolling = (rolling * BASE + ord(text[i + m])) % MOD
    return -1


def prefix_table(pattern):
    table = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k > 0 and pattern[i] != pattern[k]:
            k = table[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        table[i] = k
    return table


def find_kmp(text, pattern):
    if not pattern:
        return 0
    table = prefix_table(pattern)
    k = 0
    for i, ch in enumerate(text):
        while k > 0 and ch != pattern[k]:
            k = table[k - 1]
        if ch == pattern[k]:
            k += 1
        if k == len(pattern):
            return i - k + 1
    return -1


def all_matches(text, pattern, finder=find_kmp):
    out = []
    offset = 0
    while True:
        at = finder(text[offset:], pattern)
        if at < 0:
            break
        out.append(offset + at)
        offset += at + 1
    return out
