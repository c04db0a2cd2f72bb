"""Dense matrix arithmetic on lists of lists."""


def shape(matrix):
    if not matrix:
        return 0, 0
    return len(matrix), len(matrix[0])


def zeros(rows, cols):
    return [[0 for _ in range(cols)] for _ in range(rows)]


def identity(n):
    out = zeros(n, n)
    for i in range(n):
        out[i][i] = 1
    return out


def transpose(matrix):
    rows, cols = shape(matrix)
    out = zeros(cols, rows)
    for r in range(rows):
        for c in range(cols):
            out[c][r] = matrix[r][c]
    return out


def mat_add(a, b):
    if shape(a) != shape(b):
        raise ValueError("shape mismatch")
    rows, cols = shape(a)
    return [[a[r][c] + b[r][c] for c in range(cols)] for r in range(rows)]


def mat_mul(a, b):
    a_rows, a_cols = shape(a)
    b_rows, b_cols = shape(b)
    if a_cols != b_rows:
        raise ValueError("inner dimensions differ")
    out = zeros(a_rows, b_cols)
    for r in range(a_rows):
        for c in range(b_cols):
            total = 0
            for k in range(a_cols):
                total += a[r][k] * b[k][c]
            out[r][c] = total
    return out


def trace(matrix):
    rows, cols = shape(matrix)
    return sum(matrix[i][i] for i in range(min(rows, cols)))
