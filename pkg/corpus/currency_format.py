"""Locale-light money formatting and parsing."""

SYMBOLS = {"USD": "$", "EUR": "€", "GBP": "£", "JPY": "¥"}
DECIMALS = {"USD": 2, "EUR": 2, "GBP": 2, "JPY": 0}


def group_digits(digits, sep=","):
    out = []
    for i, ch in enumerate(reversed(digits)):
        if i and i % 3 == 0:
            out.append(sep)
        out.append(ch)
    return "".join(reversed(out))


def format_amount(cents, currency="USD"):
    decimals = DECIMALS.get(currency, 2)
    symbol = SYMBOLS.get(currency, currency + " ")
    negative = cents < 0
    value = abs(cents)
    if decimals:
        whole, frac = divmod(value, 10 ** decimals)
        body = f"{group_digits(str(whole))}.{frac:0{decimals}d}"
    else:
        body = group_digits(str(value))
    sign = "-" if negative else ""
    return f"{sign}{symbol}{body}"


def parse_amount(text, currency="USD"):
    decimals = DECIMALS.get(currency, 2)
    cleaned = text.strip()
    negative = cleaned.startswith("-") or cleaned.startswith("(") and cleaned.endswith(")")
    digits = "".join(ch for ch in cleaned if ch.isdigit() or ch == ".")
    if not digits:
        raise ValueError(f"no digits in {text!r}")
    whole, _, frac = digits.partition(".")
    frac = (frac + "0" * decimals)[:decimals] if decimals else ""
    value = int(whole or "0") * 10 ** decimals + int(frac or "0")
    return -value if negative else value


def split_evenly(cents, ways):
    if ways <= 0:
        raise ValueError("ways must be positive")
    base, remainder = divmod(cents, ways)
    return [base + (1 if i < remainder else 0) for i in range(ways)]


def exchange(cents, rate_ppm):
    """Convert using a rate expressed in parts-per-million."""
    return cents * rate_ppm // 1000000
