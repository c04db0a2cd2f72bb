"""Binary search tree with traversals and validation."""


class TreeNode:
    def __init__(self, key, value=None):
        self.key = key
        self.value = value
        self.left = None
        self.right = None


class Bst:
    def __init__(self, pairs=None):
        self.root = None
        self.size = 0
        for key, value in pairs or []:
            self.insert(key, value)

    def insert(self, key, value=None):
        if self.root is None:
            self.root = TreeNode(key, value)
            self.size += 1
            return
        node = self.root
        while True:
            if key == node.key:
                node.value = value
                return
            if key < node.key:
                if node.left is None:
                    node.left = TreeNode(key, value)
                    self.size += 1
                    return
                node = node.left
            else:
                if node.right is None:
                    node.right = TreeNode(key, value)
                    self.size += 1
                    return
                node = node.right

    def get(self, key, default=None):
        node = self.root
        while node is not None:
            if key == node.key:
                return node.value
            node = node.left if key < node.key else node.right
        return default

    def inorder(self):
        out = []
        stack = []
        node = self.root
        while stack or node is not None:
            while node is not None:
                stack.append(node)
                node = node.left
            node = stack.pop()
            out.append(node.key)
            node = node.right
        return out

    def height(self):
        def depth(node):
            if node is None:
                return 0
            return 1 + max(depth(node.left), depth(node.right))

        return depth(self.root)

    def min_key(self):
        if self.root is None:
            raise KeyError("empty tree")
        node = self.root
        while node.left is not None:
            node = node.left
        return node.key


def is_sorted_tree(tree):
    keys = tree.inorder()
    return all(a < b for a, b in zip(keys, keys[1:]))
