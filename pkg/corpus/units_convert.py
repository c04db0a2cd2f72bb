"""Unit conversion through a base-unit table."""

LENGTH_TO_METERS = {
    "mm": 0.001,
    "cm": 0.01,
    "m": 1.0,
    "km": 1000.0,
    "inch": 0.0254,
    "ft": 0.3048,
    "mile": 1609.344
}

MASS_TO_GRAMS = {
    "mg": 0.001,
    "g": 1.0,
    "kg": 1000.0,
    "oz": 28.349523125,
    "lb": 453.59237
}


class UnknownUnit(Exception):
    pass


def convert(value, src, dst, table):
    if src not in table:
        raise UnknownUnit(src)
    if dst not in table:
        raise UnknownUnit(dst)
    return value * table[src] / table[dst]


def length(value, src, dst):
    return convert(value, src, dst, LENGTH_TO_METERS)


def mass(value, src, dst):
    return convert(value, src, dst, MASS_TO_GRAMS)


def best_unit(value_meters):
    """Pick the unit that renders the value in [1, 1000)."""
    for unit in ["km", "m", "cm", "mm"]:
        scaled = value_meters / LENGTH_TO_METERS[unit]
        if 1 <= scaled < 1000:
            return scaled, unit
    return value_meters, "m"


def format_length(value_meters, digits=2):
    scaled, unit = best_unit(value_meters)
    return f"{scaled:.{digits}f} {unit}"
