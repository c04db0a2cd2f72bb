"""Descriptive statistics over numeric sequences."""

import math


def mean(values):
    if not values:
        raise ValueError("mean of empty data")
    return sum(values) / len(values)


def median(values):
    if not values:
        raise ValueError("median of empty data")
    ordered = sorted(values)
    mid = len(ordered) // 2
    if len(ordered) % 2 == 1:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2


def variance(values, sample=True):
    if len(values) < 2:
        return 0.0
    m = mean(values)
    total = sum((v - m) ** 2 for v in values)
    divisor = len(values) - 1 if sample else len(values)
    return total / divisor


def stdev(values, sample=True):
    return math.sqrt(variance(values, sample))


def percentile(values, pct):
    if not values:
        raise ValueError("percentile of empty data")
    ordered = sorted(values)
    if pct <= 0:
        return ordered[0]
    if pct >= 100:
        return ordered[-1]
    rank = pct / 100 * (len(ordered) - 1)
    low = int(rank)
    frac = rank - low
    if low + 1 < len(ordered):
        return ordered[low] * (1 - frac) + ordered[low + 1] * frac
    return ordered[low]


def zscores(values):
    m = mean(values)
    s = stdev(values)
    if s == 0:
        return [0.0 for _ in values]
    return [(v - m) / s for v in values]
