"""Recursive classics: towers of Hanoi and N-queens counting."""


def hanoi_moves(disks, source="A", target="C", spare="B"):
    if disks == 0:
        return []
    before = hanoi_moves(disks - 1, source, spare, target)
    after = hanoi_moves(disks - 1, spare, target, source)
    return before + [(source, target)] + after


def hanoi_count(disks):
    return 2 ** disks - 1


def verify_moves(disks, moves):
    pegs = {"A": list(range(disks, 0, -1)), "B": [], "C": []}
    for source, target in moves:
        if not pegs[source]:
            return False
        disk = pegs[source].pop()
        if pegs[target] and pegs[target][-1] < disk:
            return False
        pegs[target].append(disk)
    return pegs["C"] == list(range(disks, 0, -1))


def count_queens(n):
    solutions = 0

    def place(row, cols, diag1, diag2):
        nonlocal solutions
        if row == n:
            solutions += 1
            return
        for col in range(n):
            d1 = row - col
            d2 = row + col
            if col in cols or d1 in diag1 or d2 in diag2:
                continue
            place(row + 1, cols | {col}, diag1 | {d1}, diag2 | {d2})

    place(0, set(), set(), set())
    return solutions


def first_queens_solution(n):
    board = []

    def place(row):
        if row == n:
            return True
        for col in range(n):
            ok = True
            for r, c in enumerate(board):
                if c == col or abs(row - r) == abs(col - c):
                    ok = False
                    break
            if ok:
                board.append(col)
                if place(row + 1):
                    return True
                board.pop()
        return False

    if place(0):
        return list(board)
    return []
