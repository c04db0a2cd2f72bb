"""Semantic-version parsing and range checks."""


class BadVersion(Exception):
    pass


def parse(text):
    core, _, pre = text.strip().partition("-")
    parts = core.split(".")
    if len(parts) != 3:
        raise BadVersion(f"expected three components in {text!r}")
    try:
        numbers = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise BadVersion(str(exc)) from exc
    if any(n < 0 for n in numbers):
        raise BadVersion("negative component")
    return numbers, pre


def compare(a, b):
    va, pre_a = parse(a)
    vb, pre_b = parse(b)
    if va != vb:
        return -1 if va < vb else 1
    if pre_a == pre_b:
        return 0
    if not pre_a:
        return 1
    if not pre_b:
        return -1
    return -1 if pre_a < pre_b else 1


def satisfies(version, spec):
    """Specs look like '>=1.2.0' or '==2.0.0' or '^1.4.0'."""
    spec = spec.strip()
    if spec.startswith("^"):
        base, _ = parse(spec[1:])
        value, _ = parse(version)
        upper = base[0] + 1, 0, 0
        return base <= value < upper
    for op in [">=", "<=", "==", ">", "<"]:
        if spec.startswith(op):
            target = spec[len(op):]
            order = compare(version, target)
            if op == ">=":
                return order >= 0
            if op == "<=":
                return order <= 0
            if op == "==":
                return order == 0
            if op == ">":
                return order > 0
            return order < 0
    raise BadVersion(f"bad spec {spec!r}")


def latest(versions):
    best = None
    for v in versions:
        if best is None or compare(v, best) > 0:
            best = v
    return best
