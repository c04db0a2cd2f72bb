"""Single-car elevator request scheduling."""


class Elevator:
    def __init__(self, floors=10):
        self.floors = floors
        self.current = 1
        self.requests = set()
        self.direction = 0
        self.travel_log = []

    def request(self, floor):
        if floor < 1 or floor > self.floors:
            raise ValueError(f"floor {floor} out of range")
        if floor != self.current:
            self.requests.add(floor)

    def next_target(self):
        if not self.requests:
            return None
        above = sorted(f for f in self.requests if f > self.current)
        below = sorted((f for f in self.requests if f < self.current), reverse=True)
        if self.direction >= 0 and above:
            return above[0]
        if self.direction <= 0 and below:
            return below[0]
        if above:
            return above[0]
        return below[0]

    def step(self):
        target = self.next_target()
        if target is None:
            self.direction = 0
            return self.current
        if target > self.current:
            self.current += 1
            self.direction = 1
        elif target < self.current:
            self.current -= 1
            self.direction = -1
        self.travel_log.append(self.current)
        if self.current in self.requests:
            self.requests.discard(self.current)
            if not self.requests:
                self.direction = 0
        return self.current

    def run_until_idle(self, max_steps=200):
        steps = 0
        while self.requests and steps < max_steps:
            self.step()
            steps += 1
        return steps


def total_travel(elevator):
    return len(elevator.travel_log)
