"""Clamping values into the unit interval."""


def clamp01(value):
    if value < 0:
        return 0.0
    if value > 1:
        return 1.0
    return float(value)


def lerp(a, b, t):
    return a + (b - a) * clamp01(t)
