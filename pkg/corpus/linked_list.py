"""Singly linked list with the usual traversal helpers."""


class Node:
    def __init__(self, value, next=None):
        self.value = value
        self.next = next


class LinkedList:
    def __init__(self, values=None):
        self.head = None
        self.size = 0
        for v in reversed(list(values or [])):
            self.push_front(v)

    def push_front(self, value):
        self.head = Node(value, self.head)
        self.size += 1

    def push_back(self, value):
        node = Node(value)
        if self.head is None:
            self.head = node
        else:
            cursor = self.head
            while cursor.next is not None:
                cursor = cursor.next
            cursor.next = node
        self.size += 1

    def to_list(self):
        out = []
        cursor = self.head
        while cursor is not None:
            out.append(cursor.value)
            cursor = cursor.next
        return out

    def reverse(self):
        prev = None
        cursor = self.head
        while cursor is not None:
            nxt = cursor.next
            cursor.next = prev
            prev = cursor
            cursor = nxt
        self.head = prev

    def find(self, value):
        index = 0
        cursor = self.head
        while cursor is not None:
            if cursor.value == value:
                return index
            cursor = cursor.next
            index += 1
        return -1


def middle_value(values):
    lst = LinkedList(values)
    slow = lst.head
    fast = lst.head
    while fast is not None and fast.next is not None:
        slow = slow.next
        fast = fast.next.next
    if slow is None:
        return None
    return slow.value
