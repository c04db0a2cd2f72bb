"""Weighting tags into display size buckets."""

SIZES = ["xx-small", "x-small", "small", "medium", "large", "x-large", "xx-large"]


def weights(tag_counts):
    if not tag_counts:
        return {}
    low = min(tag_counts.values())
    high = max(tag_counts.values())
    span = high - low or 1
    return {tag: (count - low) / span for tag, count in tag_counts.items()}


def bucket(weight):
    slot = int(weight * (len(SIZES) - 1) + 0.5)
    return SIZES[max(0, min(slot, len(SIZES) - 1))]


def cloud(tag_counts, limit=50):
    ranked = sorted(tag_counts.items(), key=lambda kv: (-kv[1], kv[0]))[:limit]
    kept = dict(ranked)
    scaled = weights(kept)
    return {tag: bucket(w) for tag, w in sorted(scaled.items())}


def merge_counts(sources):
    combined = {}
    for counts in sources:
        for tag, n in counts.items():
            combined[tag] = combined.get(tag, 0) + n
    return combined


def trending(old_counts, new_counts, threshold=2.0):
    out = []
    for tag, n in new_counts.items():
        before = old_counts.get(tag, 0)
        if before == 0 and n >= 3:
            out.append(tag)
        elif before > 0 and n / before >= threshold:
            out.append(tag)
    return sorted(out)
