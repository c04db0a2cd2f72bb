"""Readability metrics for prose."""


def sentences(text):
    out = []
    current = []
    for ch in text:
        current.append(ch)
        if ch in ".!?":
            chunk = "".join(current).strip()
            if chunk:
                out.append(chunk)
            current = []
    tail = "".join(current).strip()
    if tail:
        out.append(tail)
    return out


def words(text):
    return [w for w in "".join(ch if ch.isalnum() or ch == "'" else " " for ch in text).split() if w]


def syllable_estimate(word):
    vowels = "aeiouy"
    count = 0
    previous_vowel = False
    for ch in word.lower():
        is_vowel = ch in vowels
        if is_vowel and not previous_vowel:
            count += 1
        previous_vowel = is_vowel
    if word.lower().endswith("e") and count > 1:
        count -= 1
    return max(1, count)


def flesch_reading_ease(text):
    sentence_list = sentences(text)
    word_list = words(text)
    if not sentence_list or not word_list:
        return 0.0
    syllables = sum(syllable_estimate(w) for w in word_list)
    words_per_sentence = len(word_list) / len(sentence_list)
    syllables_per_word = syllables / len(word_list)
    return 206.835 - 1.015 * words_per_sentence - 84.6 * syllables_per_word


def grade_band(score):
    if score >= 90:
        return "very easy"
    if score >= 70:
        return "easy"
    if score >= 50:
        return "medium"
    if score >= 30:
        return "difficult"
    return "very difficult"


def report(text):
    return {
        "sentences": len(sentences(text)),
        "words": len(words(text)),
        "score": round(flesch_reading_ease(text), 1),
        "band": grade_band(flesch_reading_ease(text))
    }
