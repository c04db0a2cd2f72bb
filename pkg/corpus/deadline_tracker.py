"""Tracking work items against deadlines, day-number based."""


class WorkItem:
    def __init__(self, name, due_day, effort_days=1):
        self.name = name
        self.due_day = due_day
        self.effort_days = effort_days
        self.done_on = None

    def is_done(self):
        return self.done_on is not None

    def finish(self, day):
        self.done_on = day

    def slack(self, today):
        return self.due_day - today - self.effort_days


def urgent_items(items, today, horizon=3):
    out = []
    for item in items:
        if item.is_done():
            continue
        if item.slack(today) <= horizon:
            out.append(item.name)
    return sorted(out)


def schedule_greedy(items, today, capacity_per_day=1):
    """Earliest-deadline-first onto daily capacity slots."""
    pending = sorted(
        (i for i in items if not i.is_done()),
        key=lambda i: (i.due_day, i.name)
    )
    plan = {}
    day = today
    used = 0
    for item in pending:
        for _ in range(item.effort_days):
            if used >= capacity_per_day:
                day += 1
                used = 0
            plan.setdefault(day, []).append(item.name)
            used += 1
    return plan


def late_report(items, plan):
    finish_day = {}
    for day, names in plan.items():
        for name in names:
            finish_day[name] = max(finish_day.get(name, 0), day)
    report = []
    for item in items:
        finished = finish_day.get(item.name)
        if finished is not None and finished > item.due_day:
            report.append((item.name, finished - item.due_day))
    return sorted(report)
