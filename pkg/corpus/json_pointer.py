"""Path-based access into nested dict/list documents."""


def split_pointer(pointer):
    if pointer in ("", "/"):
        return []
    if not pointer.startswith("/"):
        raise ValueError("pointer must start with '/'")
    parts = pointer[1:].split("/")
    return [p.replace("~1", "/").replace("~0", "~") for p in parts]


def resolve(document, pointer, default=None):
    node = document
    for part in split_pointer(pointer):
        if isinstance(node, list):
            try:
                node = node[int(part)]
            except (ValueError, IndexError):
                return default
        elif isinstance(node, dict):
            if part not in node:
                return default
            node = node[part]
        else:
            return default
    return node


def assign(document, pointer, value):
    parts = split_pointer(pointer)
    if not parts:
        raise ValueError("cannot assign to the document root")
    node = document
    for part in parts[:-1]:
        if isinstance(node, list):
            node = node[int(part)]
        else:
            node = node.setdefault(part, {})
    last = parts[-1]
    if isinstance(node, list):
        node[int(last)] = value
    else:
        node[last] = value
    return document


def collect_paths(document, prefix=""):
    paths = []
    if isinstance(document, dict):
        for key in sorted(document):
            child = prefix + "/" + str(key).replace("~", "~0").replace("/", "~1")
            paths.extend(collect_paths(document[key], child))
    elif isinstance(document, list):
        for i, item in enumerate(document):
            paths.extend(collect_paths(item, f"{prefix}/{i}"))
    else:
        paths.append(prefix or "/")
    return paths
