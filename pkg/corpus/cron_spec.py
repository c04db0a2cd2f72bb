"""Matching minute/hour cron-like field specs."""


def parse_field(spec, lo, hi):
    """Understand *, */n, a-b, a-b/n, and comma lists."""
    allowed = set()
    for part in spec.split(","):
        chunk = part.strip()
        step = 1
        if "/" in chunk:
            chunk, _, step_text = chunk.partition("/")
            step = int(step_text)
            if step < 1:
                raise ValueError("step must be positive")
        if chunk == "*":
            start, end = lo, hi
        elif "-" in chunk:
            a, _, b = chunk.partition("-")
            start, end = int(a), int(b)
        else:
            start = end = int(chunk)
        if start < lo or end > hi or start > end:
            raise ValueError(f"field {spec!r} out of range")
        allowed.update(range(start, end + 1, step))
    return allowed


class CronSpec:
    def __init__(self, text):
        fields = text.split()
        if len(fields) != 2:
            raise ValueError("expected 'minute hour'")
        self.minutes = parse_field(fields[0], 0, 59)
        self.hours = parse_field(fields[1], 0, 23)

    def matches(self, hour, minute):
        return hour in self.hours and minute in self.minutes

    def next_after(self, hour, minute):
        """Next (hour, minute) strictly after the given time, same day wrap."""
        for offset in range(1, 24 * 60 + 1):
            total = (hour * 60 + minute + offset) % (24 * 60)
            h, m = divmod(total, 60)
            if self.matches(h, m):
                return h, m
        raise RuntimeError("spec matches nothing")

    def runs_per_day(self):
        return len(self.minutes) * len(self.hours)
