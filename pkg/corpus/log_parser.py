"""Parsing and summarizing webserver-style access logs."""

import re

LINE_RE = re.compile(
    r'(?P<ip>\S+) \S+ \S+ \[(?P<when>[^\]]+)\] "(?P<method>\S+) (?P<path>\S+)[^"]*" '
    r"(?P<status>\d{3}) (?P<size>\d+|-)"
)


def parse_line(line):
    m = LINE_RE.match(line)
    if not m:
        return None
    record = m.groupdict()
    record["status"] = int(record["status"])
    record["size"] = 0 if record["size"] == "-" else int(record["size"])
    return record


def parse_log(text):
    records = []
    skipped = 0
    for line in text.splitlines():
        if not line.strip():
            continue
        record = parse_line(line)
        if record is None:
            skipped += 1
        else:
            records.append(record)
    return records, skipped


def status_breakdown(records):
    buckets = {"2xx": 0, "3xx": 0, "4xx": 0, "5xx": 0, "other": 0}
    for r in records:
        family = r["status"] // 100
        key = f"{family}xx"
        if key in buckets:
            buckets[key] += 1
        else:
            buckets["other"] += 1
    return buckets


def busiest_paths(records, n=5):
    counts = {}
    for r in records:
        counts[r["path"]] = counts.get(r["path"], 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return ranked[:n]


def total_bytes_by_ip(records):
    out = {}
    for r in records:
        out[r["ip"]] = out.get(r["ip"], 0) + r["size"]
    return out


def error_rate(records):
    if not records:
        return 0.0
    errors = sum(1 for r in records if r["status"] >= 400)
    return errors / len(records)
