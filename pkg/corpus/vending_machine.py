"""Coin-operated vending machine state transitions."""

COINS = 1, 5, 10, 25, 100


class VendingMachine:
    def __init__(self, items):
        self.items = dict(items)
        self.credit = 0
        self.bank = 0

    def insert(self, coin):
        if coin not in COINS:
            raise ValueError(f"coin {coin} not accepted")
        self.credit += coin

    def press(self, code):
        if code not in self.items:
            return "unknown selection"
        price, stock = self.items[code]
        if stock <= 0:
            return "sold out"
        if self.credit < price:
            return f"insert {price - self.credit} more"
        self.items[code] = price, stock - 1
        self.bank += price
        self.credit -= price
        return "dispensed"

    def refund(self):
        change = []
        remaining = self.credit
        for coin in sorted(COINS, reverse=True):
            while remaining >= coin:
                change.append(coin)
                remaining -= coin
        self.credit = 0
        return change

    def restock(self, code, count):
        price, stock = self.items.get(code, (0, 0))
        if price == 0:
            raise KeyError(f"no such slot {code}")
        self.items[code] = price, stock + count


def machine_report(machine):
    lines = []
    for code in sorted(machine.items):
        price, stock = machine.items[code]
        lines.append(f"{code}: {stock} in stock at {price}")
    lines.append(f"bank: {machine.bank}")
    return "\n".join(lines)
