"""Helpers for normalizing scraped text fragments."""

import re

WHITESPACE_RE = re.compile(r"\s+")
CONTROL_CHARS = {"\x00", "\x0b", "\x0c"}


def collapse_whitespace(text):
    """Collapse runs of whitespace into single spaces."""
    return WHITESPACE_RE.sub(" ", text).strip()


def strip_control(text):
    out = []
    for ch in text:
        if ch not in CONTROL_CHARS:
            out.append(ch)
    return "".join(out)


def normalize_quotes(text):
    replacements = {"“": '"', "”": '"', "‘": "'", "’": "'"}
    for old, new in replacements.items():
        text = text.replace(old, new)
    return text


def clean_fragment(text, max_len=280):
    text = strip_control(text)
    text = normalize_quotes(text)
    text = collapse_whitespace(text)
    if len(text) > max_len:
        text = text[:max_len - 3].rstrip() + "..."
    return text


def clean_all(fragments):
    cleaned = []
    for fragment in fragments:
        result = clean_fragment(fragment)
        if result:
            cleaned.append(result)
    return cleaned
