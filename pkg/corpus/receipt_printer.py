"""Fixed-width receipt layout with totals and tax lines."""

WIDTH = 32


def money(cents):
    return f"{cents // 100}.{cents % 100:02d}"


def line_item(name, cents, quantity=1):
    label = f"{name} x{quantity}" if quantity != 1 else name
    amount = money(cents * quantity)
    dots = WIDTH - len(label) - len(amount)
    return label + " " * max(1, dots) + amount


def separator(char="-"):
    return char * WIDTH


def render(items, tax_rate=0.07):
    lines = ["RECEIPT".center(WIDTH), separator()]
    subtotal = 0
    for name, cents, quantity in items:
        lines.append(line_item(name, cents, quantity))
        subtotal += cents * quantity
    tax = int(round(subtotal * tax_rate))
    total = subtotal + tax
    lines.append(separator())
    lines.append(line_item("subtotal", subtotal))
    lines.append(line_item("tax", tax))
    lines.append(line_item("TOTAL", total))
    lines.append(separator("="))
    return "\n".join(lines)


def parse_items(text):
    """Lines look like 'name,price_cents,quantity'."""
    items = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, _, rest = line.partition(",")
        price_text, _, qty_text = rest.partition(",")
        items.append((name.strip(), int(price_text), int(qty_text or "1")))
    return items


def total_cents(items, tax_rate=0.07):
    subtotal = sum(cents * qty for _, cents, qty in items)
    return subtotal + int(round(subtotal * tax_rate))
