"""Order lifecycle with state transition validation."""

TRANSITIONS = {
    "draft": {"submitted", "cancelled"},
    "submitted": {"approved", "rejected", "cancelled"},
    "approved": {"shipped", "cancelled"},
    "shipped": {"delivered", "returned"},
    "delivered": {"returned"},
    "rejected": set(),
    "cancelled": set(),
    "returned": set()
}

TERMINAL = {state for state, nexts in TRANSITIONS.items() if not nexts}


class BadTransition(Exception):
    pass


class Order:
    def __init__(self, order_id):
        self.order_id = order_id
        self.state = "draft"
        self.trail = ["draft"]

    def advance(self, new_state):
        allowed = TRANSITIONS.get(self.state, set())
        if new_state not in allowed:
            raise BadTransition(f"{self.state} -> {new_state}")
        self.state = new_state
        self.trail.append(new_state)
        return self

    def is_final(self):
        return self.state in TERMINAL

    def age_in_states(self):
        counts = {}
        for state in self.trail:
            counts[state] = counts.get(state, 0) + 1
        return counts


def bulk_advance(orders, new_state):
    moved = []
    stuck = []
    for order in orders:
        try:
            order.advance(new_state)
            moved.append(order.order_id)
        except BadTransition:
            stuck.append(order.order_id)
    return moved, stuck


def funnel_counts(orders):
    counts = {}
    for order in orders:
        counts[order.state] = counts.get(order.state, 0) + 1
    return counts


def reachable_states(start="draft"):
    seen = {start}
    frontier = [start]
    while frontier:
        state = frontier.pop()
        for nxt in TRANSITIONS.get(state, set()):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return sorted(seen)
