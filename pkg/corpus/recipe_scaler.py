"""Scaling ingredient quantities and unit-friendly rounding."""

NICE_FRACTIONS = [
    (0.25, "1/4"), (0.33, "1/3"), (0.5, "1/2"), (0.67, "2/3"), (0.75, "3/4")
]


def scale(ingredients, factor):
    if factor <= 0:
        raise ValueError("factor must be positive")
    return {name: amount * factor for name, amount in ingredients.items()}


def to_friendly(amount):
    whole = int(amount)
    frac = amount - whole
    if frac < 0.05:
        return str(whole) if whole else "0"
    for value, label in NICE_FRACTIONS:
        if abs(frac - value) < 0.09:
            if whole:
                return f"{whole} {label}"
            return label
    return f"{amount:.2f}"


def shopping_list(recipes):
    combined = {}
    for recipe in recipes:
        for name, amount in recipe.items():
            combined[name] = combined.get(name, 0) + amount
    return {name: to_friendly(amount) for name, amount in sorted(combined.items())}


def servings_for(ingredients, available):
    """How many whole batches the pantry supports."""
    batches = None
    for name, needed in ingredients.items():
        have = available.get(name, 0)
        if needed <= 0:
            continue
        possible = int(have / needed)
        if batches is None or possible < batches:
            batches = possible
    return batches or 0
