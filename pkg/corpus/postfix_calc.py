"""Infix to postfix conversion and evaluation."""

PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 3}
RIGHT_ASSOC = {"^"}


def to_postfix(tokens):
    out = []
    stack = []
    for token in tokens:
        if token.replace(".", "", 1).isdigit():
            out.append(token)
        elif token in PRECEDENCE:
            while stack and stack[-1] in PRECEDENCE:
                top = stack[-1]
                keep = PRECEDENCE[top] > PRECEDENCE[token]
                tie = PRECEDENCE[top] == PRECEDENCE[token] and token not in RIGHT_ASSOC
                if keep or tie:
                    out.append(stack.pop())
                else:
                    break
            stack.append(token)
        elif token == "(":
            stack.append(token)
        elif token == ")":
            while stack and stack[-1] != "(":
                out.append(stack.pop())
            if not stack:
                raise ValueError("unbalanced parentheses")
            stack.pop()
        else:
            raise ValueError(f"unknown token {token!r}")
    while stack:
        top = stack.pop()
        if top == "(":
            raise ValueError("unbalanced parentheses")
        out.append(top)
    return out


def eval_postfix(tokens):
    stack = []
    for token in tokens:
        if token in PRECEDENCE:
            if len(stack) < 2:
                raise ValueError("stack underflow")
            b = stack.pop()
            a = stack.pop()
            if token == "+":
                stack.append(a + b)
            elif token == "-":
                stack.append(a - b)
            elif token == "*":
                stack.append(a * b)
            elif token == "/":
                stack.append(a / b)
            else:
                stack.append(a ** b)
        else:
            stack.append(float(token))
    if len(stack) != 1:
        raise ValueError("malformed expression")
    return stack[0]


def calculate(text):
    tokens = text.replace("(", " ( ").replace(")", " ) ").split()
    return eval_postfix(to_postfix(tokens))
