"""Longest common and increasing subsequences."""


def longest_common(a, b):
    rows = len(a) + 1
    cols = len(b) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(1, rows):
        for j in range(1, cols):
            if a[i - 1] == b[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    out = []
    i = len(a)
    j = len(b)
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1]:
            out.append(a[i - 1])
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            i -= 1
        else:
            j -= 1
    out.reverse()
    return out


def longest_increasing(nums):
    if not nums:
        return []
    tails = []
    parents = [-1] * len(nums)
    indices = []
    for i, value in enumerate(nums):
        lo = 0
        hi = len(tails)
        while lo < hi:
            mid = (lo + hi) // 2
            if nums[tails[mid]] < value:
                lo = mid + 1
            else:
                hi = mid
        if lo > 0:
            parents[i] = tails[lo - 1]
        if lo == len(tails):
            tails.append(i)
        else:
            tails[lo] = i
        indices.append(lo)
    out = []
    cursor = tails[-1]
    while cursor != -1:
        out.append(nums[cursor])
        cursor = parents[cursor]
    out.reverse()
    return out


def count_distinct_subsequences(text, pattern):
    counts = [1] + [0] * len(pattern)
    for ch in text:
        for j in range(len(pattern) - 1, -1, -1):
            if pattern[j] == ch:
                counts[j + 1] += counts[j]
    return counts[len(pattern)]
