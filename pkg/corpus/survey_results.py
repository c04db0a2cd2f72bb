"""Tabulating multiple-choice survey responses."""


def tally(responses, choices):
    counts = {choice: 0 for choice in choices}
    invalid = 0
    for answer in responses:
        if answer in counts:
            counts[answer] += 1
        else:
            invalid += 1
    return counts, invalid


def percentages(counts):
    total = sum(counts.values())
    if total == 0:
        return {choice: 0.0 for choice in counts}
    return {choice: round(100 * n / total, 1) for choice, n in counts.items()}


def winner(counts):
    best = None
    best_count = -1
    tie = False
    for choice in sorted(counts):
        n = counts[choice]
        if n > best_count:
            best = choice
            best_count = n
            tie = False
        elif n == best_count:
            tie = True
    if tie:
        return None
    return best


def crosstab(rows):
    """rows are (group, answer) pairs."""
    table = {}
    for group, answer in rows:
        table.setdefault(group, {}).setdefault(answer, 0)
        table[group][answer] += 1
    return table


def summarize(responses, choices):
    counts, invalid = tally(responses, choices)
    return {
        "counts": counts,
        "percent": percentages(counts),
        "winner": winner(counts),
        "invalid": invalid
    }
