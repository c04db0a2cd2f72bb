"""Synchronous publish/subscribe with wildcard topics."""


class EventBus:
    def __init__(self):
        self.handlers = {}
        self.delivered = 0

    def subscribe(self, topic, handler):
        self.handlers.setdefault(topic, []).append(handler)

    def unsubscribe(self, topic, handler):
        handlers = self.handlers.get(topic, [])
        if handler in handlers:
            handlers.remove(handler)

    def matching_topics(self, topic):
        """Exact topic plus any wildcard prefix like 'user.*'."""
        matches = [topic]
        parts = topic.split(".")
        for cut in range(len(parts) - 1, 0, -1):
            matches.append(".".join(parts[:cut]) + ".*")
        matches.append("*")
        return matches

    def publish(self, topic, payload):
        count = 0
        for candidate in self.matching_topics(topic):
            for handler in list(self.handlers.get(candidate, [])):
                handler(topic, payload)
                count += 1
        self.delivered += count
        return count


def record_events(bus, topics):
    log = []

    def recorder(topic, payload):
        log.append((topic, payload))

    for topic in topics:
        bus.subscribe(topic, recorder)
    return log
