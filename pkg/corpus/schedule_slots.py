"""Finding free meeting slots in a busy calendar."""


def minutes(hhmm):
    hours, _, mins = hhmm.partition(":")
    return int(hours) * 60 + int(mins)


def hhmm(total):
    return f"{total // 60:02d}:{total % 60:02d}"


def merge_busy(events):
    spans = sorted((minutes(a), minutes(b)) for a, b in events)
    merged = []
    for start, end in spans:
        if merged and start <= merged[-1][1]:
            prev_start, prev_end = merged[-1]
            merged[-1] = prev_start, max(prev_end, end)
        else:
            merged.append((start, end))
    return merged


def free_slots(events, day_start="09:00", day_end="17:00", min_minutes=30):
    busy = merge_busy(events)
    slots = []
    cursor = minutes(day_start)
    close = minutes(day_end)
    for start, end in busy:
        if start > cursor:
            gap_end = min(start, close)
            if gap_end - cursor >= min_minutes:
                slots.append((hhmm(cursor), hhmm(gap_end)))
        cursor = max(cursor, end)
        if cursor >= close:
            break
    if close - cursor >= min_minutes:
        slots.append((hhmm(cursor), hhmm(close)))
    return slots


def first_common_slot(calendars, min_minutes=30):
    everything = []
    for events in calendars:
        everything.extend(events)
    options = free_slots(everything, min_minutes=min_minutes)
    if options:
        return options[0]
    return None
