"""Palindrome detection and generation helpers."""


def normalize(text):
    return "".join(ch.lower() for ch in text if ch.isalnum())


def is_palindrome(text):
    cleaned = normalize(text)
    return cleaned == cleaned[::-1]


def longest_palindromic_substring(text):
    best = ""
    n = len(text)
    for center in range(n):
        for start, end in [(center, center), (center, center + 1)]:
            lo = start
            hi = end
            while lo >= 0 and hi < n and text[lo] == text[hi]:
                lo -= 1
                hi += 1
            candidate = text[lo + 1:hi]
            if len(candidate) > len(best):
                best = candidate
    return best


def palindrome_pairs(words):
    pairs = []
    for i, left in enumerate(words):
        for j, right in enumerate(words):
            if i != j and is_palindrome(left + right):
                pairs.append((i, j))
    return pairs
