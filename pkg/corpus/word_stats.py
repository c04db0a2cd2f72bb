"""Word frequency statistics over plain text."""

from collections import Counter

STOP_WORDS = {"the", "a", "an", "and", "or", "of", "to", "in", "is", "it"}


def tokenize_words(text):
    word = []
    words = []
    for ch in text.lower():
        if ch.isalpha() or ch == "'":
            word.append(ch)
        elif word:
            words.append("".join(word))
            word = []
    if word:
        words.append("".join(word))
    return words


def frequencies(text, drop_stop_words=True):
    words = tokenize_words(text)
    if drop_stop_words:
        words = [w for w in words if w not in STOP_WORDS]
    return Counter(words)


def top_words(text, n=10):
    counts = frequencies(text)
    return counts.most_common(n)


def vocabulary_richness(text):
    words = tokenize_words(text)
    if not words:
        return 0.0
    return len(set(words)) / len(words)


def summarize(text):
    counts = frequencies(text)
    total = sum(counts.values())
    distinct = len(counts)
    return {"total": total, "distinct": distinct, "richness": vocabulary_richness(text)}
