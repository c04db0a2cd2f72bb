"""Recursive-descent evaluation of arithmetic expressions."""

from tokenizer_simple import tokenize


class Evaluator:
    def __init__(self, tokens, variables=None):
        self.tokens = tokens
        self.pos = 0
        self.variables = variables or {}

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return None

    def advance(self):
        token = self.peek()
        self.pos += 1
        return token

    def expect_symbol(self, text):
        token = self.advance()
        if token is None or token.kind != "symbol" or token.text != text:
            raise ValueError(f"expected {text!r}")

    def expression(self):
        value = self.term()
        while True:
            token = self.peek()
            if token is not None and token.kind == "symbol" and token.text in "+-":
                self.advance()
                right = self.term()
                value = value + right if token.text == "+" else value - right
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            token = self.peek()
            if token is not None and token.kind == "symbol" and token.text in "*/":
                self.advance()
                right = self.unary()
                value = value * right if token.text == "*" else value / right
            else:
                return value

    def unary(self):
        token = self.peek()
        if token is not None and token.kind == "symbol" and token.text == "-":
            self.advance()
            return -self.unary()
        return self.primary()

    def primary(self):
        token = self.advance()
        if token is None:
            raise ValueError("unexpected end of expression")
        if token.kind == "number":
            return float(token.text)
        if token.kind == "name":
            if token.text not in self.variables:
                raise NameError(f"unknown variable {token.text!r}")
            return self.variables[token.text]
        if token.kind == "symbol" and token.text == "(":
            value = self.expression()
            self.expect_symbol(")")
            return value
        raise ValueError(f"unexpected token {token!r}")


def evaluate(source, variables=None):
    ev = Evaluator(tokenize(source), variables)
    result = ev.expression()
    if ev.peek() is not None:
        raise ValueError("trailing input after expression")
    return result
