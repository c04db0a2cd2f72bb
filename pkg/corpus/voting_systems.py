"""Plurality, runoff, and Borda-count election tallies."""


def plurality(ballots):
    counts = {}
    for ballot in ballots:
        if ballot:
            first = ballot[0]
            counts[first] = counts.get(first, 0) + 1
    return counts


def winner_plurality(ballots):
    counts = plurality(ballots)
    if not counts:
        return None
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[0][0]


def instant_runoff(ballots):
    remaining = {c for ballot in ballots for c in ballot}
    rounds = []
    while len(remaining) > 1:
        counts = {c: 0 for c in remaining}
        for ballot in ballots:
            for choice in ballot:
                if choice in remaining:
                    counts[choice] += 1
                    break
        rounds.append(dict(counts))
        total = sum(counts.values())
        leader = max(counts.items(), key=lambda kv: kv[1])
        if total and leader[1] * 2 > total:
            return leader[0], rounds
        weakest = min(sorted(counts), key=lambda c: counts[c])
        remaining.discard(weakest)
    survivor = next(iter(remaining), None)
    return survivor, rounds


def borda(ballots):
    scores = {}
    for ballot in ballots:
        n = len(ballot)
        for place, candidate in enumerate(ballot):
            scores[candidate] = scores.get(candidate, 0) + (n - place - 1)
    return scores


def condorcet_pairs(ballots):
    candidates = sorted({c for ballot in ballots for c in ballot})
    wins = {}
    for i, a in enumerate(candidates):
        for b in candidates[i + 1:]:
            a_over_b = 0
            b_over_a = 0
            for ballot in ballots:
                if a in ballot and b in ballot:
                    if ballot.index(a) < ballot.index(b):
                        a_over_b += 1
                    else:
                        b_over_a += 1
            if a_over_b > b_over_a:
                wins[a, b] = a
            elif b_over_a > a_over_b:
                wins[a, b] = b
    return wins
