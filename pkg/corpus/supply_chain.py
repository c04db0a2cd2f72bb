"""Multi-stage supply chain stock-and-flow balancing."""


class Stage:
    def __init__(self, name, stock=0, capacity=100, lead_time=1):
        self.name = name
        self.stock = stock
        self.capacity = capacity
        self.lead_time = lead_time
        self.inbound = []

    def receive(self):
        arrived = 0
        remaining = []
        for eta, quantity in self.inbound:
            if eta <= 0:
                space = self.capacity - self.stock
                accepted = min(space, quantity)
                self.stock += accepted
                arrived += accepted
            else:
                remaining.append((eta - 1, quantity))
        self.inbound = remaining
        return arrived

    def ship(self, quantity):
        sent = min(self.stock, quantity)
        self.stock -= sent
        return sent


class Chain:
    def __init__(self, stages):
        self.stages = stages

    def step(self, demand):
        for stage in self.stages:
            stage.receive()
        fulfilled = self.stages[-1].ship(demand)
        for upstream, downstream in zip(self.stages, self.stages[1:]):
            gap = downstream.capacity - downstream.stock
            order = min(gap, upstream.stock)
            if order > 0:
                sent = upstream.ship(order)
                downstream.inbound.append((downstream.lead_time, sent))
        return fulfilled

    def run(self, demands):
        served = []
        for demand in demands:
            served.append(self.step(demand))
        return served

    def total_stock(self):
        in_transit = sum(q for s in self.stages for _, q in s.inbound)
        return sum(s.stock for s in self.stages) + in_transit


def service_level(demands, served):
    asked = sum(demands)
    if asked == 0:
        return 1.0
    return sum(served) / asked
