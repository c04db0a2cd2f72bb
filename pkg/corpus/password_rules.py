"""Password strength scoring against simple composition rules."""

COMMON = {"password", "123456", "qwerty", "letmein", "dragon"}


def character_classes(password):
    classes = set()
    for ch in password:
        if ch.islower():
            classes.add("lower")
        elif ch.isupper():
            classes.add("upper")
        elif ch.isdigit():
            classes.add("digit")
        else:
            classes.add("symbol")
    return classes


def has_repeats(password, run=3):
    count = 1
    for a, b in zip(password, password[1:]):
        if a == b:
            count += 1
            if count >= run:
                return True
        else:
            count = 1
    return False


def score(password):
    if not password:
        return 0
    points = min(len(password), 16)
    points += 4 * len(character_classes(password))
    if password.lower() in COMMON:
        points = 2
    if has_repeats(password):
        points -= 5
    return max(0, points)


def verdict(password):
    value = score(password)
    if value < 10:
        return "weak"
    if value < 20:
        return "fair"
    if value < 28:
        return "good"
    return "strong"


def suggest_fixes(password):
    fixes = []
    classes = character_classes(password)
    if len(password) < 12:
        fixes.append("lengthen to at least 12 characters")
    for needed in ["lower", "upper", "digit", "symbol"]:
        if needed not in classes:
            fixes.append(f"add a {needed} character")
    if has_repeats(password):
        fixes.append("break up repeated runs")
    return fixes
