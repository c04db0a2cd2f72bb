"""Frequency-analysis helper for substitution ciphers."""

ENGLISH_ORDER = "etaoinshrdlcumwfgypbvkjxqz"


def letter_frequencies(text):
    counts = {}
    total = 0
    for ch in text.lower():
        if ch.isalpha():
            counts[ch] = counts.get(ch, 0) + 1
            total += 1
    if total == 0:
        return {}
    return {ch: counts[ch] / total for ch in counts}


def frequency_order(text):
    freqs = letter_frequencies(text)
    return "".join(sorted(freqs, key=lambda ch: (-freqs[ch], ch)))


def guess_mapping(ciphertext):
    observed = frequency_order(ciphertext)
    mapping = {}
    for cipher_ch, plain_ch in zip(observed, ENGLISH_ORDER):
        mapping[cipher_ch] = plain_ch
    return mapping


def apply_mapping(text, mapping):
    out = []
    for ch in text:
        lower = ch.lower()
        if lower in mapping:
            plain = mapping[lower]
            out.append(plain.upper() if ch.isupper() else plain)
        else:
            out.append(ch)
    return "".join(out)


def score_english(text, common=("the", "and", "ing", "ion")):
    lowered = text.lower()
    return sum(lowered.count(word) for word in common)


def refine(ciphertext, mapping, swaps):
    best = dict(mapping)
    best_score = score_english(apply_mapping(ciphertext, best))
    for a, b in swaps:
        candidate = dict(best)
        candidate[a], candidate[b] = candidate.get(b, b), candidate.get(a, a)
        candidate_score = score_english(apply_mapping(ciphertext, candidate))
        if candidate_score > best_score:
            best = candidate
            best_score = candidate_score
    return best, best_score
