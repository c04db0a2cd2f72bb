"""Text histograms for quick terminal output."""


def bucketize(nums, bucket_count=10):
    if not nums:
        return []
    lo = min(nums)
    hi = max(nums)
    if lo == hi:
        return [(lo, hi, len(nums))]
    width = (hi - lo) / bucket_count
    counts = [0] * bucket_count
    for value in nums:
        slot = int((value - lo) / width)
        if slot >= bucket_count:
            slot = bucket_count - 1
        counts[slot] += 1
    out = []
    for i, count in enumerate(counts):
        start = lo + i * width
        out.append((start, start + width, count))
    return out


def render(buckets, max_width=40, fill="#"):
    if not buckets:
        return ""
    peak = max(count for _, _, count in buckets)
    lines = []
    for start, end, count in buckets:
        if peak > 0:
            bar = fill * int(count / peak * max_width)
        else:
            bar = ""
        lines.append(f"{start:8.2f}..{end:8.2f} | {bar} {count}")
    return "\n".join(lines)


def histogram(nums, bucket_count=10):
    return render(bucketize(nums, bucket_count))
