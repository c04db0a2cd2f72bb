"""URL slug generation."""

SAFE_CHARS = "abcdefghijklmnopqrstuvwxyz0123456789"
SEPARATOR = "-"


def slugify(title, max_words=8):
    words = []
    current = []
    for ch in title.lower():
        if ch in SAFE_CHARS:
            current.append(ch)
        elif current:
            words.append("".join(current))
            current = []
    if current:
        words.append("".join(current))
    if max_words > 0:
        words = words[:max_words]
    return SEPARATOR.join(words)


def unique_slug(title, existing):
    base = slugify(title)
    if base not in existing:
        return base
    counter = 2
    while f"{base}-{counter}" in existing:
        counter += 1
    return f"{base}-{counter}"


def slug_table(titles):
    seen = set()
    table = {}
    for title in titles:
        slug = unique_slug(title, seen)
        seen.add(slug)
        table[title] = slug
    return table
