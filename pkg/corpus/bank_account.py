"""Toy double-entry-ish bank accounts with a transaction log."""


class InsufficientFunds(Exception):
    pass


class Account:
    def __init__(self, owner, balance=0):
        self.owner = owner
        self.balance = balance
        self.history = []

    def deposit(self, amount):
        if amount <= 0:
            raise ValueError("deposit must be positive")
        self.balance += amount
        self.history.append(("deposit", amount))

    def withdraw(self, amount):
        if amount <= 0:
            raise ValueError("withdrawal must be positive")
        if amount > self.balance:
            raise InsufficientFunds(f"{self.owner} has only {self.balance}")
        self.balance -= amount
        self.history.append(("withdraw", amount))

    def statement(self):
        lines = [f"Statement for {self.owner}"]
        running = 0
        for kind, amount in self.history:
            if kind == "deposit":
                running += amount
            else:
                running -= amount
            lines.append(f"  {kind:<10} {amount:>8} -> {running:>8}")
        return "\n".join(lines)


def transfer(source, target, amount):
    source.withdraw(amount)
    try:
        target.deposit(amount)
    except ValueError:
        source.deposit(amount)
        raise
    return amount


def total_assets(accounts):
    return sum(acct.balance for acct in accounts)
