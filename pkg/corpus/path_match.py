"""Glob-style pattern matching for slash-separated paths."""


def match_segment(segment, pattern):
    """Match one path segment against a pattern with * and ? wildcards."""
    memo = {}

    def walk(i, j):
        if (i, j) in memo:
            return memo[i, j]
        if j == len(pattern):
            result = i == len(segment)
        elif pattern[j] == "*":
            result = walk(i, j + 1) or i < len(segment) and walk(i + 1, j)
        elif i < len(segment) and pattern[j] in ("?", segment[i]):
            result = walk(i + 1, j + 1)
        else:
            result = False
        memo[i, j] = result
        return result

    return walk(0, 0)


def match_path(path, pattern):
    segments = [s for s in path.split("/") if s]
    parts = [p for p in pattern.split("/") if p]

    def walk(i, j):
        if j == len(parts):
            return i == len(segments)
        if parts[j] == "**":
            if walk(i, j + 1):
                return True
            return i < len(segments) and walk(i + 1, j)
        if i < len(segments) and match_segment(segments[i], parts[j]):
            return walk(i + 1, j + 1)
        return False

    return walk(0, 0)


def filter_paths(paths, pattern):
    return [p for p in paths if match_path(p, pattern)]
