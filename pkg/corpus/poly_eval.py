"""Polynomials as coefficient lists, lowest power first."""


def evaluate(coeffs, x):
    """Horner evaluation."""
    result = 0
    for c in reversed(coeffs):
        result = result * x + c
    return result


def add(a, b):
    size = max(len(a), len(b))
    out = []
    for i in range(size):
        ca = a[i] if i < len(a) else 0
        cb = b[i] if i < len(b) else 0
        out.append(ca + cb)
    return trim(out)


def multiply(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(out)


def differentiate(coeffs):
    return trim([i * c for i, c in enumerate(coeffs)][1:])


def integrate_poly(coeffs, constant=0):
    out = [constant]
    for i, c in enumerate(coeffs):
        out.append(c / (i + 1))
    return out


def trim(coeffs):
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def degree(coeffs):
    return len(trim(coeffs)) - 1


def pretty(coeffs):
    terms = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        if power == 0:
            terms.append(str(c))
        elif power == 1:
            terms.append(f"{c}x")
        else:
            terms.append(f"{c}x^{power}")
    if not terms:
        return "0"
    return " + ".join(reversed(terms))
