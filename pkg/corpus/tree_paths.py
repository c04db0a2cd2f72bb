"""Path queries over nested dict trees."""


def walk(tree, visit, path=()):
    for key in sorted(tree):
        value = tree[key]
        current = path + (key,)
        if isinstance(value, dict):
            walk(value, visit, current)
        else:
            visit(current, value)


def leaves(tree):
    out = []
    walk(tree, lambda path, value: out.append(("/".join(path), value)))
    return out


def deepest_path(tree):
    best = ""
    best_depth = 0

    def check(path, value):
        nonlocal best, best_depth
        if len(path) > best_depth:
            best = "/".join(path)
            best_depth = len(path)

    walk(tree, check)
    return best


def prune(tree, predicate):
    """Drop leaves failing the predicate; collapse empty branches."""
    out = {}
    for key, value in tree.items():
        if isinstance(value, dict):
            kept = prune(value, predicate)
            if kept:
                out[key] = kept
        elif predicate(value):
            out[key] = value
    return out


def tree_sum(tree):
    total = 0

    def add(path, value):
        nonlocal total
        if isinstance(value, (int, float)):
            total += value

    walk(tree, add)
    return total
