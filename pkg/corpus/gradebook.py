"""Student grade aggregation with letter-grade cutoffs."""

CUTOFFS = [
    (90, "A"), (80, "B"), (70, "C"), (60, "D"), (0, "F")
]


class Gradebook:
    def __init__(self):
        self.scores = {}

    def record(self, student, assignment, score):
        if score < 0 or score > 100:
            raise ValueError("score must be in [0, 100]")
        self.scores.setdefault(student, {})[assignment] = score

    def average(self, student):
        entries = self.scores.get(student, {})
        if not entries:
            return 0.0
        return sum(entries.values()) / len(entries)

    def letter(self, student):
        avg = self.average(student)
        for cutoff, grade in CUTOFFS:
            if avg >= cutoff:
                return grade
        return "F"

    def ranking(self):
        pairs = [(self.average(s), s) for s in self.scores]
        pairs.sort(key=lambda p: (-p[0], p[1]))
        return [(s, round(avg, 1)) for avg, s in pairs]

    def assignment_stats(self, assignment):
        values = [
            marks[assignment]
            for marks in self.scores.values()
            if assignment in marks
        ]
        if not values:
            return {"count": 0, "mean": 0.0, "max": 0, "min": 0}
        return {
            "count": len(values),
            "mean": sum(values) / len(values),
            "max": max(values),
            "min": min(values)
        }


def curve(gradebook, bonus):
    for student, marks in gradebook.scores.items():
        for assignment in marks:
            marks[assignment] = min(100, marks[assignment] + bonus)
