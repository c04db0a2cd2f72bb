"""Cart totals with tiered discounts and tax."""

TAX_RATE = 0.08


class Cart:
    def __init__(self):
        self.lines = {}

    def add(self, sku, price, quantity=1):
        if quantity <= 0:
            raise ValueError("quantity must be positive")
        current_price, current_qty = self.lines.get(sku, (price, 0))
        self.lines[sku] = price, current_qty + quantity

    def remove(self, sku, quantity=1):
        price, current = self.lines.get(sku, (0, 0))
        remaining = current - quantity
        if remaining > 0:
            self.lines[sku] = price, remaining
        else:
            self.lines.pop(sku, None)

    def subtotal(self):
        return sum(price * qty for price, qty in self.lines.values())

    def item_count(self):
        return sum(qty for _, qty in self.lines.values())


def discount_rate(subtotal):
    if subtotal >= 200:
        return 0.15
    if subtotal >= 100:
        return 0.10
    if subtotal >= 50:
        return 0.05
    return 0.0


def checkout(cart, coupon=None):
    subtotal = cart.subtotal()
    rate = discount_rate(subtotal)
    if coupon == "EXTRA5" and subtotal > 0:
        rate += 0.05
    discounted = subtotal * (1 - rate)
    tax = discounted * TAX_RATE
    total = discounted + tax
    return {
        "subtotal": round(subtotal, 2),
        "discount": round(subtotal - discounted, 2),
        "tax": round(tax, 2),
        "total": round(total, 2)
    }
