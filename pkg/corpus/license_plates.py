"""Generating and validating sequential license plates."""

LETTERS = "ABCDEFGHJKLMNPRSTUVWXYZ"
DIGITS = "0123456789"


def plate_number(index):
    """Plates run AAA-000 through ZZZ-999 over the reduced alphabet."""
    letter_count = len(LETTERS)
    numeric = index % 1000
    letter_index = index // 1000
    letters = []
    for _ in range(3):
        letters.append(LETTERS[letter_index % letter_count])
        letter_index //= letter_count
    return "".join(reversed(letters)) + "-" + f"{numeric:03d}"


def plate_index(plate):
    letters, _, digits = plate.partition("-")
    if len(letters) != 3 or len(digits) != 3:
        raise ValueError(f"malformed plate {plate!r}")
    index = 0
    for ch in letters:
        index = index * len(LETTERS) + LETTERS.index(ch)
    return index * 1000 + int(digits)


def is_valid(plate):
    try:
        return plate_number(plate_index(plate)) == plate
    except ValueError:
        return False


def next_plates(start_plate, count):
    start = plate_index(start_plate)
    return [plate_number(start + offset) for offset in range(1, count + 1)]


def vanity_score(plate):
    """Repeated characters and round numbers score higher."""
    letters, _, digits = plate.partition("-")
    score = 0
    if len(set(letters)) == 1:
        score += 5
    if digits in ("000", "111", "222", "333", "777", "999"):
        score += 4
    if digits == "007":
        score += 3
    return score
