"""A grab-bag toolkit for validating, transforming, and reporting on
dictionary records.

Sections:
  - coercion and validation
  - selection and projection
  - joins and aggregation
  - quality checks
  - report rendering
"""


class ValidationError(Exception):
    def __init__(self, field, message):
        super().__init__(f"{field}: {message}")
        self.field = field


# --- coercion and validation -------------------------------------------------

COERCERS = {
    "int": int,
    "float": float,
    "str": str,
    "bool": lambda v: str(v).strip().lower() in ("1", "true", "yes", "on")
}


def coerce_record(record, schema):
    out = {}
    for field, kind in schema.items():
        if field not in record:
            continue
        fn = COERCERS.get(kind)
        if fn is None:
            raise ValidationError(field, f"unknown type {kind!r}")
        try:
            out[field] = fn(record[field])
        except (TypeError, ValueError) as exc:
            raise ValidationError(field, str(exc)) from exc
    for field in record:
        if field not in schema:
            out[field] = record[field]
    return out


def require_fields(record, required):
    missing = [f for f in required if f not in record or record[f] in ("", None)]
    if missing:
        raise ValidationError(missing[0], "required field is missing")
    return record


def check_ranges(record, ranges):
    for field, (lo, hi) in ranges.items():
        if field not in record:
            continue
        value = record[field]
        if not lo <= value <= hi:
            raise ValidationError(field, f"{value} outside [{lo}, {hi}]")
    return record


def validate_batch(records, schema, required=(), ranges=None):
    clean = []
    errors = []
    for i, record in enumerate(records):
        try:
            coerced = coerce_record(record, schema)
            require_fields(coerced, required)
            if ranges:
                check_ranges(coerced, ranges)
            clean.append(coerced)
        except ValidationError as exc:
            errors.append((i, str(exc)))
    return clean, errors


# --- selection and projection --------------------------------------------------


def project(records, fields):
    return [{f: r.get(f) for f in fields} for r in records]


def rename(records, mapping):
    out = []
    for r in records:
        renamed = {}
        for key, value in r.items():
            renamed[mapping.get(key, key)] = value
        out.append(renamed)
    return out


def where(records, **conditions):
    def matches(record):
        for field, expected in conditions.items():
            if callable(expected):
                if not expected(record.get(field)):
                    return False
            elif record.get(field) != expected:
                return False
        return True

    return [r for r in records if matches(r)]


def order_by(records, field, reverse=False):
    present = [r for r in records if field in r]
    absent = [r for r in records if field not in r]
    ordered = sorted(present, key=lambda r: r[field], reverse=reverse)
    return ordered + absent


def distinct(records, field):
    seen = set()
    out = []
    for r in records:
        value = r.get(field)
        if value not in seen:
            seen.add(value)
            out.append(r)
    return out


def paginate(records, page, per_page=10):
    if page < 1:
        raise ValueError("pages start at 1")
    start = (page - 1) * per_page
    chunk = records[start:start + per_page]
    pages = (len(records) + per_page - 1) // per_page
    return {"items": chunk, "page": page, "pages": pages, "total": len(records)}


# --- joins and aggregation ---------------------------------------------------


def inner_join(left, right, key):
    index = {}
    for r in right:
        index.setdefault(r.get(key), []).append(r)
    out = []
    for l in left:
        for r in index.get(l.get(key), []):
            merged = dict(r)
            merged.update(l)
            out.append(merged)
    return out


def left_join(left, right, key, fill=None):
    index = {}
    for r in right:
        index.setdefault(r.get(key), []).append(r)
    right_fields = {f for r in right for f in r}
    out = []
    for l in left:
        matches = index.get(l.get(key))
        if matches:
            for r in matches:
                merged = dict(r)
                merged.update(l)
                out.append(merged)
        else:
            merged = {f: fill for f in right_fields}
            merged.update(l)
            out.append(merged)
    return out


def group_aggregate(records, key, aggregations):
    """aggregations maps output name -> (field, fn_name)."""
    fns = {
        "sum": sum,
        "min": min,
        "max": max,
        "count": len,
        "avg": lambda values: sum(values) / len(values) if values else 0.0
    }
    groups = {}
    for r in records:
        groups.setdefault(r.get(key), []).append(r)
    out = []
    for group_key in sorted(groups, key=lambda k: str(k)):
        members = groups[group_key]
        row = {key: group_key}
        for name, (field, fn_name) in aggregations.items():
            values = [m[field] for m in members if field in m]
            fn = fns[fn_name]
            row[name] = fn(values) if fn_name != "count" else len(members)
        out.append(row)
    return out


def pivot(records, row_key, col_key, value_field, fn="sum"):
    table = {}
    col_names = set()
    for r in records:
        row_name = r.get(row_key)
        col_name = r.get(col_key)
        col_names.add(col_name)
        cell = table.setdefault(row_name, {})
        cell.setdefault(col_name, []).append(r.get(value_field, 0))
    out = {}
    for row_name in sorted(table, key=str):
        out[row_name] = {}
        for col_name in sorted(col_names, key=str):
            values = table[row_name].get(col_name, [])
            if fn == "count":
                out[row_name][col_name] = len(values)
            elif fn == "avg":
                out[row_name][col_name] = sum(values) / len(values) if values else 0
            else:
                out[row_name][col_name] = sum(values)
    return out


# --- quality checks ------------------------------------------------------------


def null_report(records):
    counts = {}
    for r in records:
        for field, value in r.items():
            if value in (None, ""):
                counts[field] = counts.get(field, 0) + 1
    return dict(sorted(counts.items()))


def duplicate_keys(records, key):
    seen = {}
    for i, r in enumerate(records):
        seen.setdefault(r.get(key), []).append(i)
    return {k: positions for k, positions in seen.items() if len(positions) > 1}


def outliers(records, field, factor=3.0):
    values = [r[field] for r in records if isinstance(r.get(field), (int, float))]
    if len(values) < 2:
        return []
    mean = sum(values) / len(values)
    variance = sum((v - mean) ** 2 for v in values) / (len(values) - 1)
    spread = variance ** 0.5
    if spread == 0:
        return []
    flagged = []
    for i, r in enumerate(records):
        value = r.get(field)
        if isinstance(value, (int, float)) and abs(value - mean) > factor * spread:
            flagged.append(i)
    return flagged


def schema_drift(records, expected_fields):
    expected = set(expected_fields)
    extra = {}
    missing = {}
    for i, r in enumerate(records):
        fields = set(r)
        for f in fields - expected:
            extra.setdefault(f, []).append(i)
        for f in expected - fields:
            missing.setdefault(f, []).append(i)
    return {"extra": extra, "missing": missing}


# --- report rendering -----------------------------------------------------------


def summarize_fields(records):
    summary = {}
    for r in records:
        for field, value in r.items():
            bucket = summary.setdefault(field, {"count": 0, "types": set()})
            bucket["count"] += 1
            bucket["types"].add(type(value).__name__)
    return {
        field: {"count": info["count"], "types": sorted(info["types"])}
        for field, info in sorted(summary.items())
    }


def to_markdown(records, fields=None):
    if not records:
        return ""
    keys = fields or sorted({f for r in records for f in r})
    lines = ["| " + " | ".join(keys) + " |"]
    lines.append("|" + "|".join("---" for _ in keys) + "|")
    for r in records:
        lines.append("| " + " | ".join(str(r.get(k, "")) for k in keys) + " |")
    return "\n".join(lines)


def quality_report(records, key, expected_fields):
    return {
        "rows": len(records),
        "nulls": null_report(records),
        "dupes": len(duplicate_keys(records, key)),
        "drift": {
            kind: len(fields)
            for kind, fields in schema_drift(records, expected_fields).items()
        }
    }
