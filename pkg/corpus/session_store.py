"""Expiring session tokens with sliding timeouts."""

TOKEN_ALPHABET = "abcdefghijkmnpqrstuvwxyz23456789"


def make_token(counter):
    value = counter * 2654435761 % 2 ** 32
    chars = []
    for _ in range(8):
        value, index = divmod(value, len(TOKEN_ALPHABET))
        chars.append(TOKEN_ALPHABET[index])
    return "".join(chars)


class SessionStore:
    def __init__(self, ttl_seconds=1800):
        self.ttl = ttl_seconds
        self.sessions = {}
        self.counter = 0

    def create(self, user, now):
        self.counter += 1
        token = make_token(self.counter)
        self.sessions[token] = {"user": user, "expires": now + self.ttl}
        return token

    def lookup(self, token, now, slide=True):
        entry = self.sessions.get(token)
        if entry is None:
            return None
        if entry["expires"] <= now:
            del self.sessions[token]
            return None
        if slide:
            entry["expires"] = now + self.ttl
        return entry["user"]

    def revoke(self, token):
        return self.sessions.pop(token, None) is not None

    def revoke_user(self, user):
        doomed = [t for t, e in self.sessions.items() if e["user"] == user]
        for token in doomed:
            del self.sessions[token]
        return len(doomed)

    def sweep(self, now):
        doomed = [t for t, e in self.sessions.items() if e["expires"] <= now]
        for token in doomed:
            del self.sessions[token]
        return len(doomed)


def active_users(store, now):
    return sorted({e["user"] for e in store.sessions.values() if e["expires"] > now})
