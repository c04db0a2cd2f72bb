"""3D point math with chained comparisons for bounds checks."""

import math


def inside_box(point, lo, hi):
    x, y, z = point
    return lo <= x <= hi and lo <= y <= hi and lo <= z <= hi


def distance(a, b):
    return math.sqrt(sum((p - q) ** 2 for p, q in zip(a, b)))


def manhattan(a, b):
    return sum(abs(p - q) for p, q in zip(a, b))


def cross(a, b):
    ax, ay, az = a
    bx, by, bz = b
    return ay * bz - az * by, az * bx - ax * bz, ax * by - ay * bx


def dot(a, b):
    return sum(p * q for p, q in zip(a, b))


def scale(point, factor):
    return tuple(p * factor for p in point)


def nearest(origin, points):
    best = None
    best_d = math.inf
    for p in points:
        d = distance(origin, p)
        if d < best_d:
            best = p
            best_d = d
    return best


def bounding_sphere(points):
    if not points:
        return (0.0, 0.0, 0.0), 0.0
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)
    cz = sum(p[2] for p in points) / len(points)
    center = cx, cy, cz
    radius = max(distance(center, p) for p in points)
    return center, radius
