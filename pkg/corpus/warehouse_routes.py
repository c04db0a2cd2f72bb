"""Pick-path planning inside a rectangular warehouse."""


def aisle_of(slot):
    """Slots look like 'A-03-2': aisle, bay, shelf."""
    parts = slot.split("-")
    if len(parts) != 3:
        raise ValueError(f"bad slot {slot!r}")
    return parts[0], int(parts[1]), int(parts[2])


def slot_distance(a, b):
    aisle_a, bay_a, shelf_a = aisle_of(a)
    aisle_b, bay_b, shelf_b = aisle_of(b)
    aisle_gap = abs(ord(aisle_a) - ord(aisle_b))
    return aisle_gap * 10 + abs(bay_a - bay_b) + abs(shelf_a - shelf_b)


def route_length(route):
    total = 0
    for here, there in zip(route, route[1:]):
        total += slot_distance(here, there)
    return total


def nearest_neighbor_route(start, slots):
    remaining = list(slots)
    route = [start]
    current = start
    while remaining:
        best = None
        best_d = None
        for slot in remaining:
            d = slot_distance(current, slot)
            if best_d is None or d < best_d or d == best_d and slot < best:
                best = slot
                best_d = d
        route.append(best)
        remaining.remove(best)
        current = best
    return route


def two_opt_once(route):
    best = list(route)
    best_len = route_length(best)
    for i in range(1, len(route) - 1):
        for j in range(i + 1, len(route)):
            candidate = route[:i] + route[i:j][::-1] + route[j:]
            length = route_length(candidate)
            if length < best_len:
                best = candidate
                best_len = length
    return best
