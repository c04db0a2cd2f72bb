"""Classic rotation cipher with a configurable alphabet."""

ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def rotate_char(ch, shift, alphabet=ALPHABET):
    lower = ch.lower()
    if lower not in alphabet:
        return ch
    idx = (alphabet.index(lower) + shift) % len(alphabet)
    rotated = alphabet[idx]
    if ch.isupper():
        return rotated.upper()
    return rotated


def encode(text, shift):
    return "".join(rotate_char(ch, shift) for ch in text)


def decode(text, shift):
    return encode(text, -shift)


def crack(text, known_word):
    """Brute-force the shift by looking for a known plaintext word."""
    for shift in range(26):
        candidate = decode(text, shift)
        if known_word in candidate:
            return shift, candidate
    return None, text
