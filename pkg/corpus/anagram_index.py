"""Finding anagrams through canonical letter signatures."""


def signature(word):
    return "".join(sorted(word.lower()))


def build_index(words):
    index = {}
    for word in words:
        index.setdefault(signature(word), set()).add(word)
    return index


def anagrams_of(word, index):
    found = index.get(signature(word), set())
    return sorted(w for w in found if w.lower() != word.lower())


def anagram_groups(words, minimum=2):
    index = build_index(words)
    groups = [sorted(group) for group in index.values() if len(group) >= minimum]
    groups.sort(key=lambda g: (-len(g), g[0]))
    return groups


def is_anagram_pair(a, b):
    return signature(a) == signature(b) and a.lower() != b.lower()


def sub_anagrams(word, candidates):
    """Words spellable from the letters of the given word."""
    budget = {}
    for ch in word.lower():
        budget[ch] = budget.get(ch, 0) + 1
    out = []
    for candidate in candidates:
        pool = dict(budget)
        ok = True
        for ch in candidate.lower():
            if pool.get(ch, 0) <= 0:
                ok = False
                break
            pool[ch] -= 1
        if ok:
            out.append(candidate)
    return sorted(out)
