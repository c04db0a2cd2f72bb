"""Temperature conversions and comfort classification."""

ABSOLUTE_ZERO_C = -273.15


def c_to_f(celsius):
    return celsius * 9 / 5 + 32


def f_to_c(fahrenheit):
    return (fahrenheit - 32) * 5 / 9


def c_to_k(celsius):
    kelvin = celsius - ABSOLUTE_ZERO_C
    if kelvin < 0:
        raise ValueError("below absolute zero")
    return kelvin


def classify(celsius):
    if celsius < -10:
        return "frigid"
    elif celsius < 5:
        return "cold"
    elif celsius < 18:
        return "cool"
    elif celsius < 26:
        return "comfortable"
    elif celsius < 33:
        return "warm"
    else:
        return "hot"


def daily_range(readings):
    if not readings:
        raise ValueError("no readings")
    return max(readings) - min(readings)


def smooth(readings, window=3):
    if window < 1:
        raise ValueError("window must be positive")
    out = []
    for i in range(len(readings)):
        lo = max(0, i - window + 1)
        chunk = readings[lo:i + 1]
        out.append(sum(chunk) / len(chunk))
    return out
