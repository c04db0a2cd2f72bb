"""Evaluating boolean logic gate circuits."""

GATES = {
    "and": lambda inputs: all(inputs),
    "or": lambda inputs: any(inputs),
    "not": lambda inputs: not inputs[0],
    "xor": lambda inputs: sum(1 for i in inputs if i) % 2 == 1,
    "nand": lambda inputs: not all(inputs),
    "nor": lambda inputs: not any(inputs)
}


class Circuit:
    def __init__(self):
        self.nodes = {}

    def wire_input(self, name):
        self.nodes[name] = "input", []

    def add_gate(self, name, kind, sources):
        if kind not in GATES:
            raise ValueError(f"unknown gate {kind!r}")
        if kind == "not" and len(sources) != 1:
            raise ValueError("not takes one input")
        self.nodes[name] = kind, list(sources)

    def evaluate(self, inputs):
        cache = {}

        def value_of(name):
            if name in cache:
                return cache[name]
            kind, sources = self.nodes[name]
            if kind == "input":
                result = bool(inputs[name])
            else:
                result = GATES[kind]([value_of(s) for s in sources])
            cache[name] = result
            return result

        return {name: value_of(name) for name in self.nodes}

    def truth_table(self, output):
        input_names = sorted(n for n, (k, _) in self.nodes.items() if k == "input")
        rows = []
        for mask in range(2 ** len(input_names)):
            assignment = {}
            for bit, name in enumerate(reversed(input_names)):
                assignment[name] = bool(mask >> bit & 1)
            result = self.evaluate(assignment)[output]
            rows.append((tuple(assignment[n] for n in input_names), result))
        return input_names, rows


def half_adder():
    c = Circuit()
    c.wire_input("a")
    c.wire_input("b")
    c.add_gate("sum", "xor", ["a", "b"])
    c.add_gate("carry", "and", ["a", "b"])
    return c
