"""Humanizing second counts as durations."""

UNITS = [
    ("week", 7 * 24 * 3600),
    ("day", 24 * 3600),
    ("hour", 3600),
    ("minute", 60),
    ("second", 1)
]


def breakdown(seconds):
    if seconds < 0:
        raise ValueError("negative duration")
    parts = []
    remaining = int(seconds)
    for name, size in UNITS:
        count, remaining = divmod(remaining, size)
        if count:
            parts.append((name, count))
    if not parts:
        parts.append(("second", 0))
    return parts


def humanize(seconds, max_parts=2):
    parts = breakdown(seconds)[:max_parts]
    words = []
    for name, count in parts:
        suffix = "" if count == 1 else "s"
        words.append(f"{count} {name}{suffix}")
    return ", ".join(words)


def parse_duration(text):
    """Parse strings like '1h30m15s' into seconds."""
    suffixes = {"w": 7 * 86400, "d": 86400, "h": 3600, "m": 60, "s": 1}
    total = 0
    number = ""
    for ch in text.strip():
        if ch.isdigit():
            number += ch
        elif ch in suffixes and number:
            total += int(number) * suffixes[ch]
            number = ""
        elif ch.isspace():
            continue
        else:
            raise ValueError(f"bad duration near {ch!r}")
    if number:
        total += int(number)
    return total


def clock_format(seconds):
    hours, rest = divmod(int(seconds), 3600)
    minutes, secs = divmod(rest, 60)
    return f"{hours:02d}:{minutes:02d}:{secs:02d}"
