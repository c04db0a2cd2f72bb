"""Word ladders: shortest chains of single-letter edits."""

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def neighbors(word, dictionary):
    out = []
    for i in range(len(word)):
        for letter in ALPHABET:
            if letter == word[i]:
                continue
            candidate = word[:i] + letter + word[i + 1:]
            if candidate in dictionary:
                out.append(candidate)
    return out


def ladder(start, goal, words):
    dictionary = {w for w in words if len(w) == len(start)}
    dictionary.add(goal)
    if len(start) != len(goal):
        return []
    if start == goal:
        return [start]
    parents = {start: None}
    frontier = [start]
    while frontier:
        next_frontier = []
        for word in frontier:
            for step in neighbors(word, dictionary):
                if step in parents:
                    continue
                parents[step] = word
                if step == goal:
                    path = [goal]
                    while parents[path[-1]] is not None:
                        path.append(parents[path[-1]])
                    path.reverse()
                    return path
                next_frontier.append(step)
        frontier = next_frontier
    return []


def ladder_length(start, goal, words):
    chain = ladder(start, goal, words)
    return len(chain)


def reachable_in(start, words, steps):
    dictionary = {w for w in words if len(w) == len(start)}
    seen = {start}
    frontier = [start]
    for _ in range(steps):
        next_frontier = []
        for word in frontier:
            for step in neighbors(word, dictionary):
                if step not in seen:
                    seen.add(step)
                    next_frontier.append(step)
        frontier = next_frontier
    seen.discard(start)
    return sorted(seen)
