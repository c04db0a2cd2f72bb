"""Ordered, idempotent schema-migration execution."""


class MigrationError(Exception):
    pass


class Runner:
    def __init__(self):
        self.applied = []
        self.registry = {}

    def register(self, version, name, up, down=None):
        if version in self.registry:
            raise MigrationError(f"duplicate version {version}")
        self.registry[version] = {"name": name, "up": up, "down": down}

    def pending(self):
        done = set(self.applied)
        return [v for v in sorted(self.registry) if v not in done]

    def migrate(self, state, target=None):
        for version in self.pending():
            if target is not None and version > target:
                break
            entry = self.registry[version]
            state = entry["up"](state)
            self.applied.append(version)
        return state

    def rollback(self, state, steps=1):
        for _ in range(steps):
            if not self.applied:
                break
            version = self.applied.pop()
            entry = self.registry[version]
            if entry["down"] is None:
                self.applied.append(version)
                raise MigrationError(f"{entry['name']} is irreversible")
            state = entry["down"](state)
        return state


def checksum(versions):
    value = 0
    for v in versions:
        value = value * 31 + v & 0xFFFFFFFF
    return value
