"""Habit tracking over day-number checklists."""


def current_streak(days_done, today):
    streak = 0
    day = today
    done = set(days_done)
    while day in done:
        streak += 1
        day -= 1
    return streak


def longest_streak(days_done):
    if not days_done:
        return 0
    done = sorted(set(days_done))
    best = run = 1
    for a, b in zip(done, done[1:]):
        if b == a + 1:
            run += 1
            best = max(best, run)
        else:
            run = 1
    return best


def completion_rate(days_done, start_day, end_day):
    if end_day < start_day:
        raise ValueError("end before start")
    window = set(range(start_day, end_day + 1))
    done = window & set(days_done)
    return len(done) / len(window)


def freeze_needed(days_done, today, target_streak):
    """How many missed days a streak-freeze would need to cover."""
    done = set(days_done)
    misses = 0
    day = today
    length = 0
    while length < target_streak:
        if day not in done:
            misses += 1
        length += 1
        day -= 1
    return misses


def weekly_view(days_done, week_start):
    done = set(days_done)
    return [week_start + offset in done for offset in range(7)]
