"""Morse code translation tables and helpers."""

TO_MORSE = {
    "a": ".-", "b": "-...", "c": "-.-.", "d": "-..", "e": ".", "f": "..-.",
    "g": "--.", "h": "....", "i": "..", "j": ".---", "k": "-.-", "l": ".-..",
    "m": "--", "n": "-.", "o": "---", "p": ".--.", "q": "--.-", "r": ".-.",
    "s": "...", "t": "-", "u": "..-", "v": "...-", "w": ".--", "x": "-..-",
    "y": "-.--", "z": "--..", "0": "-----", "1": ".----", "2": "..---",
    "3": "...--", "4": "....-", "5": ".....", "6": "-....", "7": "--...",
    "8": "---..", "9": "----."
}
FROM_MORSE = {code: letter for letter, code in TO_MORSE.items()}


def encode(text):
    words = []
    for word in text.lower().split():
        letters = [TO_MORSE[ch] for ch in word if ch in TO_MORSE]
        words.append(" ".join(letters))
    return " / ".join(words)


def decode(signal):
    words = []
    for chunk in signal.split("/"):
        letters = [FROM_MORSE.get(code, "?") for code in chunk.split()]
        words.append("".join(letters))
    return " ".join(w for w in words if w)


def timing_units(signal):
    """Total duration in dot-units, with standard gaps."""
    total = 0
    for i, ch in enumerate(signal):
        if ch == ".":
            total += 1
        elif ch == "-":
            total += 3
        elif ch == " ":
            total += 3
        elif ch == "/":
            total += 7
        if ch in ".-" and i + 1 < len(signal) and signal[i + 1] in ".-":
            total += 1
    return total
