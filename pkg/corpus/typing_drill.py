"""Scoring typed text against a target passage."""


def accuracy(target, typed):
    if not target:
        return 1.0 if not typed else 0.0
    correct = sum(1 for a, b in zip(target, typed) if a == b)
    return correct / max(len(target), len(typed))


def words_per_minute(typed, seconds):
    if seconds <= 0:
        return 0.0
    words = len(typed) / 5
    return words * 60 / seconds


def mistakes(target, typed):
    out = []
    for i, (a, b) in enumerate(zip(target, typed)):
        if a != b:
            out.append((i, a, b))
    longer = max(len(target), len(typed))
    for i in range(min(len(target), len(typed)), longer):
        expected = target[i] if i < len(target) else ""
        got = typed[i] if i < len(typed) else ""
        out.append((i, expected, got))
    return out


def problem_keys(target, typed, top=5):
    counts = {}
    for _, expected, got in mistakes(target, typed):
        if expected:
            counts[expected] = counts.get(expected, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return [key for key, _ in ranked[:top]]


def grade(target, typed, seconds):
    acc = accuracy(target, typed)
    wpm = words_per_minute(typed, seconds)
    if acc < 0.85:
        return "practice accuracy first"
    if wpm < 20:
        return "solid accuracy; build speed"
    if wpm < 50:
        return "good"
    return "excellent"
