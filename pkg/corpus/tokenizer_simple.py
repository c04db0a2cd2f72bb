"""Whitespace-and-symbol tokenizer for a calculator language."""

SYMBOLS = "+-*/()^"


class Token:
    def __init__(self, kind, text):
        self.kind = kind
        self.text = text

    def __repr__(self):
        return f"Token({self.kind!r}, {self.text!r})"


def tokenize(source):
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
        elif ch in SYMBOLS:
            tokens.append(Token("symbol", ch))
            i += 1
        elif ch.isdigit() or ch == ".":
            start = i
            seen_dot = False
            while i < n and (source[i].isdigit() or source[i] == "." and not seen_dot):
                if source[i] == ".":
                    seen_dot = True
                i += 1
            tokens.append(Token("number", source[start:i]))
        elif ch.isalpha() or ch == "_":
            start = i
            while i < n and (source[i].isalnum() or source[i] == "_"):
                i += 1
            tokens.append(Token("name", source[start:i]))
        else:
            raise ValueError(f"unexpected character {ch!r} at {i}")
    return tokens


def token_kinds(source):
    return [t.kind for t in tokenize(source)]


def reconstruct(tokens):
    return " ".join(t.text for t in tokens)
