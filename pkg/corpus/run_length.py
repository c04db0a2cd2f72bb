"""Run-length encoding for strings and byte-like sequences."""


def encode(text):
    if not text:
        return []
    runs = []
    current = text[0]
    count = 1
    for ch in text[1:]:
        if ch == current:
            count += 1
        else:
            runs.append((current, count))
            current = ch
            count = 1
    runs.append((current, count))
    return runs


def decode(runs):
    return "".join(ch * count for ch, count in runs)


def compression_ratio(text):
    runs = encode(text)
    encoded_len = sum(1 + len(str(count)) for _, count in runs)
    if not text:
        return 1.0
    return encoded_len / len(text)


def longest_run(text):
    best_char = ""
    best_count = 0
    for ch, count in encode(text):
        if count > best_count:
            best_char = ch
            best_count = count
    return best_char, best_count
