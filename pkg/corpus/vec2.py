"""Minimal 2D vector arithmetic."""

import math


class Vec2:
    """An immutable-by-convention pair of floats."""

    def __init__(self, x=0.0, y=0.0):
        self.x = x
        self.y = y

    def __repr__(self):
        return f"Vec2({self.x}, {self.y})"

    def add(self, other):
        return Vec2(self.x + other.x, self.y + other.y)

    def sub(self, other):
        return Vec2(self.x - other.x, self.y - other.y)

    def scale(self, factor):
        return Vec2(self.x * factor, self.y * factor)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def length(self):
        return math.sqrt(self.dot(self))

    def normalized(self):
        size = self.length()
        if size == 0:
            return Vec2(0.0, 0.0)
        return self.scale(1.0 / size)


def centroid(points):
    if not points:
        raise ValueError("centroid of no points")
    total = Vec2(0.0, 0.0)
    for p in points:
        total = total.add(p)
    return total.scale(1.0 / len(points))


def farthest_from(origin, points):
    best = None
    best_dist = -1.0
    for p in points:
        d = p.sub(origin).length()
        if d > best_dist:
            best = p
            best_dist = d
    return best
