"""Euler integration of a body under inverse-square gravity."""

import math

GM = 398600.4418


def acceleration(position):
    x, y = position
    r = math.sqrt(x * x + y * y)
    if r == 0:
        raise ZeroDivisionError("singularity at the origin")
    a = -GM / (r * r * r)
    return a * x, a * y


def euler_step(position, velocity, dt):
    ax, ay = acceleration(position)
    vx, vy = velocity
    x, y = position
    new_velocity = vx + ax * dt, vy + ay * dt
    new_position = x + vx * dt, y + vy * dt
    return new_position, new_velocity


def simulate(position, velocity, dt=1.0, steps=100):
    path = [position]
    for _ in range(steps):
        position, velocity = euler_step(position, velocity, dt)
        path.append(position)
    return path


def apoapsis_periapsis(path):
    radii = [math.sqrt(x * x + y * y) for x, y in path]
    return max(radii), min(radii)


def circular_speed(radius):
    return math.sqrt(GM / radius)


def specific_energy(position, velocity):
    x, y = position
    vx, vy = velocity
    r = math.sqrt(x * x + y * y)
    v2 = vx * vx + vy * vy
    return v2 / 2 - GM / r
