"""Percentage rollouts and rule-based feature gating."""


def stable_hash(text):
    """Deterministic 32-bit FNV-1a."""
    value = 2166136261
    for byte in text.encode("utf-8"):
        value ^= byte
        value = value * 16777619 & 0xFFFFFFFF
    return value


class FlagSet:
    def __init__(self):
        self.flags = {}

    def define(self, name, enabled=False, percent=None, allow=None, deny=None):
        self.flags[name] = {
            "enabled": enabled,
            "percent": percent,
            "allow": set(allow or []),
            "deny": set(deny or [])
        }

    def is_on(self, name, user=None):
        flag = self.flags.get(name)
        if flag is None:
            return False
        if user is not None:
            if user in flag["deny"]:
                return False
            if user in flag["allow"]:
                return True
        if flag["percent"] is not None and user is not None:
            bucket = stable_hash(f"{name}:{user}") % 100
            return bucket < flag["percent"]
        return flag["enabled"]

    def enabled_for(self, user):
        return sorted(name for name in self.flags if self.is_on(name, user))


def rollout_report(flagset, name, users):
    on = [u for u in users if flagset.is_on(name, u)]
    share = len(on) / len(users) if users else 0.0
    return {"on": len(on), "total": len(users), "share": round(share, 3)}
