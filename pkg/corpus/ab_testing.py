"""Bucketing users into experiment variants."""


def fnv(text):
    value = 2166136261
    for byte in text.encode("utf-8"):
        value ^= byte
        value = value * 16777619 & 0xFFFFFFFF
    return value


class Experiment:
    def __init__(self, name, variants):
        if not variants:
            raise ValueError("need at least one variant")
        total = sum(weight for _, weight in variants)
        if total <= 0:
            raise ValueError("weights must sum to a positive number")
        self.name = name
        self.variants = variants
        self.total = total

    def variant_for(self, user):
        bucket = fnv(f"{self.name}|{user}") % self.total
        cursor = 0
        for variant, weight in self.variants:
            cursor += weight
            if bucket < cursor:
                return variant
        return self.variants[-1][0]

    def split_report(self, users):
        counts = {variant: 0 for variant, _ in self.variants}
        for user in users:
            counts[self.variant_for(user)] += 1
        return counts


def conversion_rates(assignments, conversions):
    totals = {}
    converted = {}
    for user, variant in assignments.items():
        totals[variant] = totals.get(variant, 0) + 1
        if user in conversions:
            converted[variant] = converted.get(variant, 0) + 1
    rates = {}
    for variant, n in totals.items():
        rates[variant] = converted.get(variant, 0) / n
    return rates


def lift(rates, control="control"):
    base = rates.get(control)
    if base is None or base == 0:
        return {}
    return {
        variant: round((rate - base) / base * 100, 1)
        for variant, rate in rates.items()
        if variant != control
    }
