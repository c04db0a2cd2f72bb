"""Deterministic playlist ordering that avoids artist repeats."""


def artist_of(track):
    return track.split(" - ")[0]


def spread_artists(tracks):
    """Round-robin across artists to avoid back-to-back repeats."""
    by_artist = {}
    for track in tracks:
        by_artist.setdefault(artist_of(track), []).append(track)
    queues = [by_artist[a] for a in sorted(by_artist)]
    out = []
    while any(queues):
        queues.sort(key=lambda q: (-len(q), artist_of(q[0]) if q else ""))
        progressed = False
        for queue in queues:
            if not queue:
                continue
            candidate = queue[0]
            if out and artist_of(out[-1]) == artist_of(candidate) and sum(len(q) for q in queues) > 1:
                continue
            out.append(queue.pop(0))
            progressed = True
            break
        if not progressed:
            for queue in queues:
                if queue:
                    out.append(queue.pop(0))
                    break
    return out


def repeat_violations(playlist):
    return sum(1 for a, b in zip(playlist, playlist[1:]) if artist_of(a) == artist_of(b))


def crossfade_plan(durations, overlap=3):
    """Start times when each track begins, given overlapping ends."""
    starts = []
    clock = 0
    for length in durations:
        starts.append(clock)
        clock += max(1, length - overlap)
    return starts


def total_runtime(durations, overlap=3):
    plan = crossfade_plan(durations, overlap)
    if not plan:
        return 0
    return plan[-1] + durations[-1]
