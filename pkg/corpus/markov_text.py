"""Order-1 Markov chains over words, with deterministic sampling."""


def build_chain(text):
    words = text.split()
    chain = {}
    for current, following in zip(words, words[1:]):
        chain.setdefault(current, []).append(following)
    return chain


def transition_counts(chain):
    return {word: len(nexts) for word, nexts in chain.items()}


def most_likely_next(chain, word):
    options = chain.get(word, [])
    if not options:
        return None
    counts = {}
    for option in options:
        counts[option] = counts.get(option, 0) + 1
    best = None
    best_count = -1
    for option in sorted(counts):
        if counts[option] > best_count:
            best = option
            best_count = counts[option]
    return best


def generate(chain, start, length=10):
    out = [start]
    current = start
    for _ in range(length - 1):
        follower = most_likely_next(chain, current)
        if follower is None:
            break
        out.append(follower)
        current = follower
    return " ".join(out)


def loop_words(chain):
    """Words that can eventually lead back to themselves."""
    loops = set()
    for word in chain:
        seen = set()
        cursor = most_likely_next(chain, word)
        while cursor is not None and cursor not in seen:
            seen.add(cursor)
            if cursor == word:
                loops.add(word)
                break
            cursor = most_likely_next(chain, cursor)
    return loops
