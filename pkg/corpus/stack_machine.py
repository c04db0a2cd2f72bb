"""A small stack-based calculator virtual machine."""


class StackError(Exception):
    pass


class Machine:
    def __init__(self):
        self.stack = []
        self.ops = {
            "+": lambda a, b: a + b,
            "-": lambda a, b: a - b,
            "*": lambda a, b: a * b,
            "/": lambda a, b: a / b,
            "%": lambda a, b: a % b
        }

    def push(self, value):
        self.stack.append(value)

    def pop(self):
        if not self.stack:
            raise StackError("pop from empty stack")
        return self.stack.pop()

    def apply(self, op):
        if op not in self.ops:
            raise StackError(f"unknown operator {op!r}")
        b = self.pop()
        a = self.pop()
        self.push(self.ops[op](a, b))

    def run(self, program):
        for token in program.split():
            if token in self.ops:
                self.apply(token)
            else:
                self.push(float(token))
        if len(self.stack) != 1:
            raise StackError("program left extra values")
        return self.stack[0]


def evaluate(expression):
    return Machine().run(expression)
