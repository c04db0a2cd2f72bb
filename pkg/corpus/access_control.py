"""Role-based permissions with inheritance."""

ROLE_PARENTS = {
    "viewer": [],
    "editor": ["viewer"],
    "admin": ["editor"],
    "owner": ["admin"]
}

GRANTS = {
    "viewer": {"read"},
    "editor": {"write", "comment"},
    "admin": {"delete", "invite"},
    "owner": {"transfer", "billing"}
}


def expand_roles(role):
    seen = []
    stack = [role]
    while stack:
        current = stack.pop()
        if current in seen:
            continue
        seen.append(current)
        stack.extend(ROLE_PARENTS.get(current, []))
    return seen


def permissions_for(role):
    allowed = set()
    for r in expand_roles(role):
        allowed |= GRANTS.get(r, set())
    return allowed


def can(role, action):
    return action in permissions_for(role)


class Acl:
    def __init__(self):
        self.assignments = {}

    def grant(self, user, role, resource="*"):
        if role not in ROLE_PARENTS:
            raise ValueError(f"unknown role {role!r}")
        self.assignments.setdefault(user, {})[resource] = role

    def role_on(self, user, resource):
        roles = self.assignments.get(user, {})
        return roles.get(resource) or roles.get("*")

    def check(self, user, action, resource):
        role = self.role_on(user, resource)
        if role is None:
            return False
        return can(role, action)

    def audit(self, resource):
        out = {}
        for user in sorted(self.assignments):
            role = self.role_on(user, resource)
            if role is not None:
                out[user] = sorted(permissions_for(role))
        return out
