"""Binary min-heap on a plain list."""


class MinHeap:
    def __init__(self, values=None):
        self.data = []
        for v in values or []:
            self.push(v)

    def __len__(self):
        return len(self.data)

    def push(self, value):
        self.data.append(value)
        self._sift_up(len(self.data) - 1)

    def peek(self):
        if not self.data:
            raise IndexError("heap is empty")
        return self.data[0]

    def pop(self):
        top = self.peek()
        last = self.data.pop()
        if self.data:
            self.data[0] = last
            self._sift_down(0)
        return top

    def _sift_up(self, index):
        while index > 0:
            parent = (index - 1) // 2
            if self.data[index] >= self.data[parent]:
                break
            self.data[index], self.data[parent] = self.data[parent], self.data[index]
            index = parent

    def _sift_down(self, index):
        size = len(self.data)
        while True:
            smallest = index
            for child in [2 * index + 1, 2 * index + 2]:
                if child < size and self.data[child] < self.data[smallest]:
                    smallest = child
            if smallest == index:
                return
            self.data[index], self.data[smallest] = self.data[smallest], self.data[index]
            index = smallest


def heap_sort(values):
    heap = MinHeap(values)
    return [heap.pop() for _ in range(len(heap))]


def k_smallest(values, k):
    return heap_sort(values)[:k]
