"""Deck handling and poker-style hand ranking."""

SUITS = "CDHS"
RANKS = "23456789TJQKA"


def full_deck():
    return [rank + suit for suit in SUITS for rank in RANKS]


def rank_value(card):
    return RANKS.index(card[0]) + 2


def shuffle_deterministic(deck, seed):
    """Fisher-Yates with a simple linear congruential stream."""
    cards = list(deck)
    state = seed & 0x7FFFFFFF
    for i in range(len(cards) - 1, 0, -1):
        state = state * 1103515245 + 12345 & 0x7FFFFFFF
        j = state % (i + 1)
        cards[i], cards[j] = cards[j], cards[i]
    return cards


def deal(deck, hands, per_hand):
    if hands * per_hand > len(deck):
        raise ValueError("not enough cards")
    dealt = [[] for _ in range(hands)]
    for round_no in range(per_hand):
        for h in range(hands):
            dealt[h].append(deck[round_no * hands + h])
    remaining = deck[hands * per_hand:]
    return dealt, remaining


def classify_hand(cards):
    values = sorted((rank_value(c) for c in cards), reverse=True)
    suits = {c[1] for c in cards}
    counts = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    shape = sorted(counts.values(), reverse=True)
    is_flush = len(suits) == 1
    spread = values[0] - values[-1]
    is_straight = len(counts) == 5 and spread == 4
    if is_straight and is_flush:
        return "straight flush"
    if shape[0] == 4:
        return "four of a kind"
    if shape == [3, 2]:
        return "full house"
    if is_flush:
        return "flush"
    if is_straight:
        return "straight"
    if shape[0] == 3:
        return "three of a kind"
    if shape == [2, 2, 1]:
        return "two pair"
    if shape[0] == 2:
        return "one pair"
    return "high card"
