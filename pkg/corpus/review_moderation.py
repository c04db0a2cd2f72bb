"""Scoring user reviews for auto-moderation."""

BANNED = {"spamlink", "freemoney", "clickhere"}
SUSPECT = {"amazing", "incredible", "unbelievable"}


def shout_ratio(text):
    letters = [ch for ch in text if ch.isalpha()]
    if not letters:
        return 0.0
    upper = sum(1 for ch in letters if ch.isupper())
    return upper / len(letters)


def punctuation_runs(text, threshold=3):
    run = 0
    worst = 0
    for ch in text:
        if ch in "!?":
            run += 1
            worst = max(worst, run)
        else:
            run = 0
    return worst >= threshold


def contains_banned(text):
    lowered = text.lower().replace(" ", "")
    return any(term in lowered for term in BANNED)


def hype_count(text):
    lowered = text.lower()
    return sum(lowered.count(term) for term in SUSPECT)


def moderation_score(review):
    """Higher is worse; above 5 should be held for review."""
    text = review.get("text", "")
    score = 0
    if contains_banned(text):
        score += 10
    if punctuation_runs(text):
        score += 2
    if shout_ratio(text) > 0.5 and len(text) > 20:
        score += 2
    score += min(3, hype_count(text))
    rating = review.get("rating")
    if rating in (1, 5) and len(text) < 15:
        score += 1
    return score


def triage(reviews):
    held = []
    approved = []
    for review in reviews:
        if moderation_score(review) > 5:
            held.append(review)
        else:
            approved.append(review)
    return approved, held
