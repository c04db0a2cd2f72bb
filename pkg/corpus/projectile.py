"""Ballistic trajectories under constant gravity."""

import math

GRAVITY = 9.80665


def components(speed, angle_degrees):
    angle = math.radians(angle_degrees)
    return speed * math.cos(angle), speed * math.sin(angle)


def flight_time(speed, angle_degrees, launch_height=0.0):
    _, vy = components(speed, angle_degrees)
    discriminant = vy * vy + 2 * GRAVITY * launch_height
    return (vy + math.sqrt(discriminant)) / GRAVITY


def max_height(speed, angle_degrees, launch_height=0.0):
    _, vy = components(speed, angle_degrees)
    return launch_height + vy * vy / (2 * GRAVITY)


def horizontal_range(speed, angle_degrees, launch_height=0.0):
    vx, _ = components(speed, angle_degrees)
    return vx * flight_time(speed, angle_degrees, launch_height)


def position_at(speed, angle_degrees, t, launch_height=0.0):
    vx, vy = components(speed, angle_degrees)
    x = vx * t
    y = launch_height + vy * t - GRAVITY * t * t / 2
    return x, max(0.0, y)


def sample_path(speed, angle_degrees, points=20, launch_height=0.0):
    total = flight_time(speed, angle_degrees, launch_height)
    path = []
    for i in range(points + 1):
        t = total * i / points
        path.append(position_at(speed, angle_degrees, t, launch_height))
    return path


def best_angle_for_range(speed, launch_height=0.0):
    best_angle = 0
    best_range = -1.0
    for tenth in range(0, 901):
        angle = tenth / 10
        r = horizontal_range(speed, angle, launch_height)
        if r > best_range:
            best_angle = angle
            best_range = r
    return best_angle
