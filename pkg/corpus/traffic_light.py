"""A timed traffic light state machine."""

SEQUENCE = ["green", "yellow", "red"]
DURATIONS = {"green": 30, "yellow": 5, "red": 25}


class TrafficLight:
    def __init__(self, start="red"):
        if start not in SEQUENCE:
            raise ValueError(f"unknown state {start!r}")
        self.state = start
        self.elapsed = 0
        self.transitions = 0

    def tick(self, seconds=1):
        self.elapsed += seconds
        while self.elapsed >= DURATIONS[self.state]:
            self.elapsed -= DURATIONS[self.state]
            index = SEQUENCE.index(self.state)
            self.state = SEQUENCE[(index + 1) % len(SEQUENCE)]
            self.transitions += 1
        return self.state

    def time_until(self, target):
        if target not in SEQUENCE:
            raise ValueError(f"unknown state {target!r}")
        total = 0
        state = self.state
        remaining = DURATIONS[state] - self.elapsed
        while state != target:
            total += remaining
            state = SEQUENCE[(SEQUENCE.index(state) + 1) % len(SEQUENCE)]
            remaining = DURATIONS[state]
        return total


def simulate(light, seconds):
    timeline = []
    for _ in range(seconds):
        timeline.append(light.tick())
    return timeline


def longest_phase(timeline):
    if not timeline:
        return "", 0
    best = current = timeline[0]
    best_len = run = 1
    for state in timeline[1:]:
        if state == current:
            run += 1
        else:
            current = state
            run = 1
        if run > best_len:
            best = current
            best_len = run
    return best, best_len
