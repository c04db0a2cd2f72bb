"""In-memory task tracker with priorities and completion."""

PRIORITIES = "low", "normal", "high"


class Task:
    def __init__(self, title, priority="normal"):
        if priority not in PRIORITIES:
            raise ValueError(f"unknown priority {priority!r}")
        self.title = title
        self.priority = priority
        self.done = False

    def complete(self):
        self.done = True

    def sort_key(self):
        return PRIORITIES.index(self.priority), self.title.lower()


class TodoList:
    def __init__(self):
        self.tasks = []

    def add(self, title, priority="normal"):
        task = Task(title, priority)
        self.tasks.append(task)
        return task

    def pending(self):
        out = [t for t in self.tasks if not t.done]
        out.sort(key=lambda t: t.sort_key(), reverse=True)
        return out

    def complete_matching(self, needle):
        count = 0
        for task in self.tasks:
            if needle.lower() in task.title.lower() and not task.done:
                task.complete()
                count += 1
        return count

    def progress(self):
        if not self.tasks:
            return 0.0
        finished = sum(1 for t in self.tasks if t.done)
        return finished / len(self.tasks)

    def by_priority(self):
        groups = {p: [] for p in PRIORITIES}
        for task in self.tasks:
            groups[task.priority].append(task.title)
        return groups
