"""Warehouse inventory with reservations."""


class OutOfStock(Exception):
    pass


class Inventory:
    def __init__(self):
        self.stock = {}
        self.reserved = {}

    def add(self, sku, quantity):
        if quantity < 0:
            raise ValueError("cannot add negative stock")
        self.stock[sku] = self.stock.get(sku, 0) + quantity

    def available(self, sku):
        return self.stock.get(sku, 0) - self.reserved.get(sku, 0)

    def reserve(self, sku, quantity):
        if self.available(sku) < quantity:
            raise OutOfStock(f"only {self.available(sku)} of {sku} available")
        self.reserved[sku] = self.reserved.get(sku, 0) + quantity

    def release(self, sku, quantity):
        held = self.reserved.get(sku, 0)
        self.reserved[sku] = max(0, held - quantity)

    def commit(self, sku, quantity):
        self.release(sku, quantity)
        remaining = self.stock.get(sku, 0) - quantity
        if remaining < 0:
            raise OutOfStock(f"commit exceeds stock for {sku}")
        self.stock[sku] = remaining

    def low_stock(self, threshold=5):
        return sorted(sku for sku, count in self.stock.items() if count <= threshold)


def fulfill_order(inventory, lines):
    for sku, quantity in lines:
        inventory.reserve(sku, quantity)
    for sku, quantity in lines:
        inventory.commit(sku, quantity)
    return True
