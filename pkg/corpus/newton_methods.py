"""Root finding by bisection, Newton, and secant iterations."""

TOLERANCE = 1e-10
MAX_STEPS = 200


def bisection(fn, lo, hi, tolerance=TOLERANCE):
    f_lo = fn(lo)
    f_hi = fn(hi)
    if f_lo * f_hi > 0:
        raise ValueError("no sign change on the bracket")
    for _ in range(MAX_STEPS):
        mid = (lo + hi) / 2
        f_mid = fn(mid)
        if abs(f_mid) < tolerance or (hi - lo) / 2 < tolerance:
            return mid
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo = mid
            f_lo = f_mid
    return (lo + hi) / 2


def derivative(fn, x, h=1e-7):
    return (fn(x + h) - fn(x - h)) / (2 * h)


def newton(fn, guess, tolerance=TOLERANCE):
    x = guess
    for _ in range(MAX_STEPS):
        fx = fn(x)
        if abs(fx) < tolerance:
            return x
        slope = derivative(fn, x)
        if slope == 0:
            raise ZeroDivisionError("flat derivative")
        x = x - fx / slope
    return x


def secant(fn, x0, x1, tolerance=TOLERANCE):
    f0 = fn(x0)
    f1 = fn(x1)
    for _ in range(MAX_STEPS):
        if abs(f1) < tolerance:
            return x1
        denom = f1 - f0
        if denom == 0:
            break
        x2 = x1 - f1 * (x1 - x0) / denom
        x0, f0 = x1, f1
        x1 = x2
        f1 = fn(x1)
    return x1


def sqrt_newton(value):
    if value < 0:
        raise ValueError("negative input")
    if value == 0:
        return 0.0
    return newton(lambda x: x * x - value, max(1.0, value))
