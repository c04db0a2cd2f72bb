"""Plain gradient descent on scalar functions of a vector."""


def numeric_gradient(fn, point, h=1e-6):
    grad = []
    for i in range(len(point)):
        forward = list(point)
        backward = list(point)
        forward[i] += h
        backward[i] -= h
        grad.append((fn(forward) - fn(backward)) / (2 * h))
    return grad


def step(point, grad, learning_rate):
    return [p - learning_rate * g for p, g in zip(point, grad)]


def norm(vector):
    return sum(v * v for v in vector) ** 0.5


def minimize(fn, start, learning_rate=0.1, tolerance=1e-8, max_steps=10000):
    point = list(start)
    history = [fn(point)]
    for _ in range(max_steps):
        grad = numeric_gradient(fn, point)
        if norm(grad) < tolerance:
            break
        point = step(point, grad, learning_rate)
        history.append(fn(point))
        if len(history) > 2 and history[-1] > history[-2]:
            learning_rate *= 0.5
    return point, history


def minimize_quadratic(a, b):
    """Minimize a x^2 + b x analytically and numerically, for comparison."""
    analytic = -b / (2 * a)
    numeric, _ = minimize(lambda v: a * v[0] ** 2 + b * v[0], [0.0], learning_rate=0.05)
    return analytic, numeric[0]
