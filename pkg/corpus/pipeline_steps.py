"""A declarative record-processing pipeline."""


class Pipeline:
    def __init__(self):
        self.steps = []

    def map(self, fn):
        self.steps.append(("map", fn))
        return self

    def filter(self, predicate):
        self.steps.append(("filter", predicate))
        return self

    def sort(self, key=None, reverse=False):
        self.steps.append(("sort", (key, reverse)))
        return self

    def limit(self, count):
        self.steps.append(("limit", count))
        return self

    def run(self, records):
        data = list(records)
        for kind, arg in self.steps:
            if kind == "map":
                data = [arg(r) for r in data]
            elif kind == "filter":
                data = [r for r in data if arg(r)]
            elif kind == "sort":
                key, reverse = arg
                data = sorted(data, key=key, reverse=reverse)
            elif kind == "limit":
                data = data[:arg]
        return data


def top_scores(records, n=3):
    pipeline = Pipeline()
    pipeline.filter(lambda r: r.get("score") is not None)
    pipeline.map(lambda r: dict(r, score=float(r["score"])))
    pipeline.sort(key=lambda r: r["score"], reverse=True)
    pipeline.limit(n)
    return pipeline.run(records)
