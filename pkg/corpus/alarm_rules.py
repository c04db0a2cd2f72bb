"""Threshold alarms with hysteresis and acknowledgment."""


class Alarm:
    def __init__(self, name, high, low=None):
        self.name = name
        self.high = high
        self.low = low if low is not None else high * 0.9
        self.active = False
        self.acknowledged = False
        self.trips = 0

    def update(self, value):
        if not self.active and value >= self.high:
            self.active = True
            self.acknowledged = False
            self.trips += 1
        elif self.active and value <= self.low:
            self.active = False
        return self.active

    def acknowledge(self):
        if self.active:
            self.acknowledged = True
            return True
        return False

    def state(self):
        if not self.active:
            return "clear"
        return "acked" if self.acknowledged else "ringing"


def feed(alarm, samples):
    timeline = []
    for value in samples:
        alarm.update(value)
        timeline.append(alarm.state())
    return timeline


def ringing(alarms):
    return sorted(a.name for a in alarms if a.state() == "ringing")


def flappiest(alarms):
    best = None
    for alarm in alarms:
        if best is None or alarm.trips > best.trips:
            best = alarm
    return best.name if best else None
