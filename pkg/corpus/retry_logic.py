"""Deterministic retry policies (no clocks, callers supply attempts)."""


class GaveUp(Exception):
    def __init__(self, attempts, last_error):
        super().__init__(f"gave up after {attempts} attempts")
        self.attempts = attempts
        self.last_error = last_error


def backoff_delays(base=1.0, factor=2.0, retries=5, cap=60.0):
    delays = []
    delay = base
    for _ in range(retries):
        delays.append(min(delay, cap))
        delay *= factor
    return delays


def run_with_retries(fn, retries=3, retriable=(ValueError,)):
    last = None
    for attempt in range(1, retries + 1):
        try:
            return fn(attempt)
        except retriable as exc:
            last = exc
    raise GaveUp(retries, last)


class CircuitBreaker:
    def __init__(self, threshold=5):
        self.threshold = threshold
        self.failures = 0
        self.open = False

    def record_success(self):
        self.failures = 0
        self.open = False

    def record_failure(self):
        self.failures += 1
        if self.failures >= self.threshold:
            self.open = True

    def call(self, fn, *args):
        if self.open:
            raise GaveUp(self.failures, None)
        try:
            result = fn(*args)
        except Exception:
            self.record_failure()
            raise
        self.record_success()
        return result
