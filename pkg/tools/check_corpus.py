#!/usr/bin/env python3
"""Validate corpus files: CPython-parseable, subset-parseable, and golden.

Golden means the whitespace-stripped source equals the whitespace-stripped
py->simpy->py round trip, and the CPython AST of the round trip matches the
CPython AST of the source.
"""

import ast
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from simpykit.convert import roundtrip_check, strip_code_whitespace, simpy_to_py, py_to_simpy
from simpykit.pyparse import parse_python
from simpykit.table import default_table


def check_file(path: Path, table) -> list[str]:
    problems = []
    source = path.read_text("utf-8")
    try:
        ast.parse(source)
    except SyntaxError as exc:
        return [f"cpython rejects: {exc}"]
    try:
        parse_python(source)
    except Exception as exc:
        return [f"subset parser rejects: {exc}"]
    report = roundtrip_check(source, table, file_id=path.name)
    if report.error_stage:
        return [f"round trip failed at {report.error_stage}: {report.error}"]
    if not report.ast_equal:
        problems.append("round trip is not tree-equal")
    final = simpy_to_py(py_to_simpy(source, table), table)
    if strip_code_whitespace(source) != strip_code_whitespace(final):
        problems.append("not golden: stripped text differs after round trip")
    if ast.dump(ast.parse(source)) != ast.dump(ast.parse(final)):
        problems.append("cpython AST differs after round trip")
    return problems


def main() -> int:
    table = default_table()
    roots = [Path(p) for p in (sys.argv[1:] or ["corpus", "programs"])]
    bad = 0
    total = 0
    for root in roots:
        if not root.exists():
            continue
        for path in sorted(root.rglob("*.py")):
            total += 1
            problems = check_file(path, table)
            if problems:
                bad += 1
                for p in problems:
                    print(f"{path}: {p}")
    print(f"{total - bad}/{total} files clean")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
