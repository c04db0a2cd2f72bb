"""Task scheduling on a priority queue with aging."""

import heapq


class Scheduler:
    def __init__(self):
        self.heap = []
        self.counter = 0
        self.completed = []

    def submit(self, name, priority=5):
        if priority < 0 or priority > 9:
            raise ValueError("priority must be 0..9")
        entry = priority, self.counter, name
        heapq.heappush(self.heap, entry)
        self.counter += 1

    def run_next(self):
        if not self.heap:
            return None
        priority, _, name = heapq.heappop(self.heap)
        self.completed.append(name)
        return name

    def age_all(self, amount=1):
        """Raise priority of everything still waiting."""
        aged = [(max(0, p - amount), order, name) for p, order, name in self.heap]
        heapq.heapify(aged)
        self.heap = aged

    def pending(self):
        return sorted(self.heap)

    def run_all(self):
        order = []
        while self.heap:
            order.append(self.run_next())
        return order


def simulate(jobs, age_every=3):
    scheduler = Scheduler()
    executed = []
    for i, (name, priority) in enumerate(jobs):
        scheduler.submit(name, priority)
        if i % age_every == age_every - 1:
            scheduler.age_all()
            done = scheduler.run_next()
            if done:
                executed.append(done)
    executed.extend(scheduler.run_all())
    return executed
