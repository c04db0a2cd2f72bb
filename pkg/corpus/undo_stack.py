"""Undo/redo command history for a text buffer."""


class Buffer:
    def __init__(self, text=""):
        self.text = text
        self.undo_stack = []
        self.redo_stack = []

    def _snapshot(self):
        self.undo_stack.append(self.text)
        self.redo_stack.clear()
        if len(self.undo_stack) > 100:
            self.undo_stack.pop(0)

    def insert(self, position, chunk):
        self._snapshot()
        self.text = self.text[:position] + chunk + self.text[position:]

    def delete(self, start, end):
        self._snapshot()
        self.text = self.text[:start] + self.text[end:]

    def replace(self, old, new):
        self._snapshot()
        self.text = self.text.replace(old, new)

    def undo(self):
        if not self.undo_stack:
            return False
        self.redo_stack.append(self.text)
        self.text = self.undo_stack.pop()
        return True

    def redo(self):
        if not self.redo_stack:
            return False
        self.undo_stack.append(self.text)
        self.text = self.redo_stack.pop()
        return True


def apply_script(buffer, operations):
    for op in operations:
        kind = op[0]
        if kind == "insert":
            buffer.insert(op[1], op[2])
        elif kind == "delete":
            buffer.delete(op[1], op[2])
        elif kind == "replace":
            buffer.replace(op[1], op[2])
        elif kind == "undo":
            buffer.undo()
        elif kind == "redo":
            buffer.redo()
        else:
            raise ValueError(f"unknown operation {kind!r}")
    return buffer.text
