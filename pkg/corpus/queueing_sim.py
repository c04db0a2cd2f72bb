"""Single-server queue simulation from fixed arrival traces."""


def simulate(arrivals, service_times):
    """Both inputs are lists of equal length; times are numbers."""
    if len(arrivals) != len(service_times):
        raise ValueError("traces must align")
    finish = 0.0
    stats = []
    for arrive, service in zip(arrivals, service_times):
        start = max(arrive, finish)
        finish = start + service
        stats.append({
            "arrive": arrive,
            "start": start,
            "finish": finish,
            "wait": start - arrive
        })
    return stats


def average_wait(stats):
    if not stats:
        return 0.0
    return sum(s["wait"] for s in stats) / len(stats)


def max_queue_depth(stats):
    """How many jobs were simultaneously in the system."""
    events = []
    for s in stats:
        events.append((s["arrive"], 1))
        events.append((s["finish"], -1))
    events.sort()
    depth = 0
    deepest = 0
    for _, delta in events:
        depth += delta
        deepest = max(deepest, depth)
    return deepest


def utilization(stats):
    if not stats:
        return 0.0
    busy = sum(s["finish"] - s["start"] for s in stats)
    span = stats[-1]["finish"] - stats[0]["arrive"]
    return busy / span if span else 0.0


def tail_latency(stats, percentile=95):
    waits = sorted(s["wait"] for s in stats)
    if not waits:
        return 0.0
    index = min(len(waits) - 1, int(len(waits) * percentile / 100))
    return waits[index]
