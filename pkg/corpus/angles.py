"""Angle arithmetic in degrees and radians."""

import math

FULL_TURN = 360.0


def normalize_degrees(angle):
    """Map any angle into [0, 360)."""
    remainder = angle % FULL_TURN
    if remainder < 0:
        remainder += FULL_TURN
    return remainder


def shortest_difference(a, b):
    """Signed smallest rotation from a to b, in (-180, 180]."""
    diff = normalize_degrees(b - a)
    if diff > 180.0:
        diff -= FULL_TURN
    return diff


def to_radians(degrees):
    return degrees * math.pi / 180.0


def to_degrees(radians):
    return radians * 180.0 / math.pi


def heading_name(angle):
    names = ["N", "NE", "E", "SE", "S", "SW", "W", "NW"]
    slot = int((normalize_degrees(angle) + 22.5) // 45) % 8
    return names[slot]


def interpolate(a, b, t):
    """Interpolate along the shortest arc."""
    return normalize_degrees(a + shortest_difference(a, b) * t)
