"""Prefix tree for word storage and completion."""


class TrieNode:
    def __init__(self):
        self.children = {}
        self.terminal = False


class Trie:
    def __init__(self, words=None):
        self.root = TrieNode()
        self.count = 0
        for word in words or []:
            self.insert(word)

    def insert(self, word):
        node = self.root
        for ch in word:
            if ch not in node.children:
                node.children[ch] = TrieNode()
            node = node.children[ch]
        if not node.terminal:
            node.terminal = True
            self.count += 1

    def contains(self, word):
        node = self._walk(word)
        return node is not None and node.terminal

    def _walk(self, prefix):
        node = self.root
        for ch in prefix:
            node = node.children.get(ch)
            if node is None:
                return None
        return node

    def completions(self, prefix, limit=10):
        start = self._walk(prefix)
        if start is None:
            return []
        found = []
        stack = [(start, prefix)]
        while stack and len(found) < limit:
            node, word = stack.pop()
            if node.terminal:
                found.append(word)
            for ch in sorted(node.children, reverse=True):
                stack.append((node.children[ch], word + ch))
        return found
