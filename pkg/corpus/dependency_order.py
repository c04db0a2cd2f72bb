"""Topological ordering of dependency graphs."""


class CycleError(Exception):
    def __init__(self, nodes):
        super().__init__(f"dependency cycle: {sorted(nodes)}")
        self.nodes = nodes


def topo_sort(dependencies):
    """dependencies maps node -> list of prerequisites."""
    incoming = {}
    followers = {}
    for node, prereqs in dependencies.items():
        incoming.setdefault(node, 0)
        for p in prereqs:
            incoming.setdefault(p, 0)
            followers.setdefault(p, set())
            if node not in followers[p]:
                followers[p].add(node)
                incoming[node] = incoming.get(node, 0) + 1
    ready = sorted(n for n, count in incoming.items() if count == 0)
    order = []
    while ready:
        node = ready.pop(0)
        order.append(node)
        for follower in sorted(followers.get(node, [])):
            incoming[follower] -= 1
            if incoming[follower] == 0:
                ready.append(follower)
        ready.sort()
    if len(order) != len(incoming):
        remaining = {n for n, count in incoming.items() if count > 0}
        raise CycleError(remaining)
    return order


def build_layers(dependencies):
    """Group nodes into waves that can run in parallel."""
    order = topo_sort(dependencies)
    depth = {}
    for node in order:
        prereqs = dependencies.get(node, [])
        if prereqs:
            depth[node] = 1 + max(depth.get(p, 0) for p in prereqs)
        else:
            depth[node] = 0
    layers = {}
    for node, d in depth.items():
        layers.setdefault(d, []).append(node)
    return [sorted(layers[d]) for d in sorted(layers)]


def transitive_deps(dependencies, node):
    seen = set()
    stack = list(dependencies.get(node, []))
    while stack:
        current = stack.pop()
        if current not in seen:
            seen.add(current)
            stack.extend(dependencies.get(current, []))
    return seen
