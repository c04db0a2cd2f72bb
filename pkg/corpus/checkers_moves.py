"""Legal move generation for simplified checkers pieces."""

SIZE = 8


def on_board(row, col):
    return 0 <= row < SIZE and 0 <= col < SIZE


def simple_moves(board, row, col):
    piece = board.get((row, col))
    if piece is None:
        return []
    directions = []
    if piece in ("w", "W", "B"):
        directions.extend([(-1, -1), (-1, 1)])
    if piece in ("b", "B", "W"):
        directions.extend([(1, -1), (1, 1)])
    moves = []
    for dr, dc in directions:
        r, c = row + dr, col + dc
        if on_board(r, c) and (r, c) not in board:
            moves.append((r, c))
    return moves


def jump_moves(board, row, col):
    piece = board.get((row, col))
    if piece is None:
        return []
    enemy = "bB" if piece.lower() == "w" else "wW"
    directions = [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    jumps = []
    for dr, dc in directions:
        over = row + dr, col + dc
        land = row + 2 * dr, col + 2 * dc
        if not on_board(*land):
            continue
        if board.get(over, " ") in enemy and land not in board:
            jumps.append(land)
    return jumps


def all_moves(board, side):
    """Jumps are mandatory when available."""
    jumps = {}
    steps = {}
    for (row, col), piece in board.items():
        if piece.lower() != side:
            continue
        j = jump_moves(board, row, col)
        if j:
            jumps[row, col] = j
        s = simple_moves(board, row, col)
        if s:
            steps[row, col] = s
    return jumps if jumps else steps


def should_crown(row, piece):
    if piece == "w" and row == 0:
        return True
    return piece == "b" and row == SIZE - 1
