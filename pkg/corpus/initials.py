"""Initials from full names."""


def initials(name):
    return "".join(word[0].upper() for word in name.split() if word)


def monogram(name, sep="."):
    letters = initials(name)
    return sep.join(letters) + sep if letters else ""
