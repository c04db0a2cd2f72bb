"""Board logic for a 3x3 grid game."""

LINES = [
    [0, 1, 2], [3, 4, 5], [6, 7, 8],
    [0, 3, 6], [1, 4, 7], [2, 5, 8],
    [0, 4, 8], [2, 4, 6]
]


def new_board():
    return [" "] * 9


def legal_moves(board):
    return [i for i, cell in enumerate(board) if cell == " "]


def place(board, index, mark):
    if board[index] != " ":
        raise ValueError(f"cell {index} is taken")
    out = list(board)
    out[index] = mark
    return out


def winner(board):
    for line in LINES:
        marks = {board[i] for i in line}
        if len(marks) == 1 and " " not in marks:
            return board[line[0]]
    return None


def is_draw(board):
    return winner(board) is None and not legal_moves(board)


def best_move(board, mark):
    """One-ply lookahead: win if possible, else block, else center-first."""
    other = "O" if mark == "X" else "X"
    for candidate in legal_moves(board):
        if winner(place(board, candidate, mark)) == mark:
            return candidate
    for candidate in legal_moves(board):
        if winner(place(board, candidate, other)) == other:
            return candidate
    for preferred in [4, 0, 2, 6, 8, 1, 3, 5, 7]:
        if board[preferred] == " ":
            return preferred
    return -1


def render(board):
    rows = []
    for r in range(3):
        rows.append("|".join(board[3 * r:3 * r + 3]))
    return "\n-+-+-\n".join(rows)
