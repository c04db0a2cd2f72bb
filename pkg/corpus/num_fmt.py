"""Number formatting: engineering notation, ordinals, padding."""

SUFFIXES = ["", "k", "M", "G", "T"]


def short_scale(value):
    magnitude = 0
    scaled = float(abs(value))
    while scaled >= 1000 and magnitude < len(SUFFIXES) - 1:
        scaled /= 1000
        magnitude += 1
    sign = "-" if value < 0 else ""
    if magnitude == 0:
        return f"{sign}{int(abs(value))}"
    return f"{sign}{scaled:.1f}{SUFFIXES[magnitude]}"


def ordinal(n):
    suffix = "th"
    if n % 100 not in (11, 12, 13):
        last = n % 10
        if last == 1:
            suffix = "st"
        elif last == 2:
            suffix = "nd"
        elif last == 3:
            suffix = "rd"
    return f"{n}{suffix}"


def pad_aligned(numbers, decimals=2):
    texts = [f"{n:.{decimals}f}" for n in numbers]
    width = max(len(t) for t in texts) if texts else 0
    return [t.rjust(width) for t in texts]


def spell_small(n):
    ones = ["zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"]
    teens = ["ten", "eleven", "twelve", "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen"]
    tens = ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"]
    if n < 0 or n > 99:
        raise ValueError("supported range is 0..99")
    if n < 10:
        return ones[n]
    if n < 20:
        return teens[n - 10]
    word = tens[n // 10]
    if n % 10:
        word += "-" + ones[n % 10]
    return word


def thousand_sep(n, sep="_"):
    sign = "-" if n < 0 else ""
    digits = str(abs(n))
    groups = []
    while digits:
        groups.append(digits[-3:])
        digits = digits[:-3]
    return sign + sep.join(reversed(groups))
