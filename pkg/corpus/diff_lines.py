"""Line-oriented diff via longest common subsequence."""


def lcs_table(old, new):
    rows = len(old) + 1
    cols = len(new) + 1
    table = [[0] * cols for _ in range(rows)]
    for i in range(1, rows):
        for j in range(1, cols):
            if old[i - 1] == new[j - 1]:
                table[i][j] = table[i - 1][j - 1] + 1
            else:
                table[i][j] = max(table[i - 1][j], table[i][j - 1])
    return table


def diff(old_text, new_text):
    old = old_text.splitlines()
    new = new_text.splitlines()
    table = lcs_table(old, new)
    out = []
    i = len(old)
    j = len(new)
    while i > 0 and j > 0:
        if old[i - 1] == new[j - 1]:
            out.append(("  ", old[i - 1]))
            i -= 1
            j -= 1
        elif table[i - 1][j] >= table[i][j - 1]:
            out.append(("- ", old[i - 1]))
            i -= 1
        else:
            out.append(("+ ", new[j - 1]))
            j -= 1
    while i > 0:
        out.append(("- ", old[i - 1]))
        i -= 1
    while j > 0:
        out.append(("+ ", new[j - 1]))
        j -= 1
    out.reverse()
    return out


def render(entries):
    return "\n".join(marker + line for marker, line in entries)


def stats(entries):
    added = sum(1 for marker, _ in entries if marker == "+ ")
    removed = sum(1 for marker, _ in entries if marker == "- ")
    same = len(entries) - added - removed
    return {"added": added, "removed": removed, "unchanged": same}
