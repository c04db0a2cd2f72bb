"""Monthly budget envelopes with overspend detection."""


class Envelope:
    def __init__(self, name, allowance):
        self.name = name
        self.allowance = allowance
        self.spent = 0.0

    def spend(self, amount, note=""):
        if amount <= 0:
            raise ValueError("spend must be positive")
        self.spent += amount
        return self.remaining()

    def remaining(self):
        return self.allowance - self.spent

    def is_over(self):
        return self.spent > self.allowance


class Budget:
    def __init__(self):
        self.envelopes = {}

    def add_envelope(self, name, allowance):
        if name in self.envelopes:
            raise KeyError(f"envelope {name!r} exists")
        self.envelopes[name] = Envelope(name, allowance)

    def spend(self, name, amount):
        if name not in self.envelopes:
            raise KeyError(f"no envelope {name!r}")
        return self.envelopes[name].spend(amount)

    def transfer(self, source, target, amount):
        src = self.envelopes[source]
        dst = self.envelopes[target]
        if amount > src.remaining():
            raise ValueError("transfer exceeds remaining allowance")
        src.allowance -= amount
        dst.allowance += amount

    def overspent(self):
        return sorted(e.name for e in self.envelopes.values() if e.is_over())

    def health(self):
        total_allow = sum(e.allowance for e in self.envelopes.values())
        total_spent = sum(e.spent for e in self.envelopes.values())
        if total_allow == 0:
            return 0.0
        return max(0.0, 1.0 - total_spent / total_allow)
