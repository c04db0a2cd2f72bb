"""Algebraic chessboard coordinates and knight tours."""

FILES = "abcdefgh"


def to_square(file_index, rank_index):
    if not (0 <= file_index < 8 and 0 <= rank_index < 8):
        raise ValueError("coordinates off the board")
    return FILES[file_index] + str(rank_index + 1)


def from_square(square):
    if len(square) != 2:
        raise ValueError(f"bad square {square!r}")
    file_index = FILES.find(square[0].lower())
    rank_index = int(square[1]) - 1
    if file_index < 0 or not 0 <= rank_index < 8:
        raise ValueError(f"bad square {square!r}")
    return file_index, rank_index


def knight_moves(square):
    f, r = from_square(square)
    offsets = [
        (1, 2), (2, 1), (2, -1), (1, -2),
        (-1, -2), (-2, -1), (-2, 1), (-1, 2)
    ]
    out = []
    for df, dr in offsets:
        nf, nr = f + df, r + dr
        if 0 <= nf < 8 and 0 <= nr < 8:
            out.append(to_square(nf, nr))
    return sorted(out)


def shortest_knight_path(start, goal):
    if start == goal:
        return [start]
    parents = {start: None}
    frontier = [start]
    while frontier:
        next_frontier = []
        for square in frontier:
            for move in knight_moves(square):
                if move in parents:
                    continue
                parents[move] = square
                if move == goal:
                    path = [move]
                    while parents[path[-1]] is not None:
                        path.append(parents[path[-1]])
                    path.reverse()
                    return path
                next_frontier.append(move)
        frontier = next_frontier
    return []


def same_color(square_a, square_b):
    fa, ra = from_square(square_a)
    fb, rb = from_square(square_b)
    return (fa + ra) % 2 == (fb + rb) % 2
