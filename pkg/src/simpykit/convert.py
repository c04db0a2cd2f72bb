"""Bidirectional Python <-> SimPy conversion and its round-trip verifier.

Conversion is always parse-then-emit through the shared tree; there is no
token-stream shortcut and no hidden state, so repeated conversions of the
same bytes give identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import asdict, dataclass, field

from .errors import SimpykitError
from .pyemit import emit_python
from .pylex import EOF as PY_EOF
from .pylex import lex_python
from .pyparse import parse_python
from .simpyemit import emit_simpy
from .simpylex import EOF as SP_EOF
from .simpylex import lex_simpy
from .simpyparse import parse_simpy
from .table import GrammarTokenTable, default_table
from .treeops import ast_equal

REPORT_FIELDS = (
    "file_id", "ast_equal", "text_equal_ignoring_whitespace",
    "python_token_count", "simpy_token_count",
    "py_to_simpy_us", "simpy_to_py_us", "error_stage", "error",
)


def py_to_simpy(source: str, table: GrammarTokenTable | None = None) -> str:
    """Convert Python text to SimPy text (parse, then emit)."""
    return emit_simpy(parse_python(source), table or default_table())


def simpy_to_py(source: str, table: GrammarTokenTable | None = None) -> str:
    """Convert SimPy text back to canonical Python text."""
    return emit_python(parse_simpy(source, table or default_table()))


def count_python_tokens(source: str) -> int:
    return sum(1 for t in lex_python(source) if t.kind != PY_EOF)


def count_simpy_tokens(source: str, table: GrammarTokenTable | None = None) -> int:
    return sum(1 for t in lex_simpy(source, table or default_table()) if t.kind != SP_EOF)


def strip_code_whitespace(source: str) -> str:
    """Delete every whitespace character outside string literals.

    Lexes the text so string payloads survive untouched; whitespace inside
    comments is deleted too (comments are not string literals).
    """
    parts = []
    for tok in lex_python(source):
        if tok.kind == "comment":
            parts.append("".join(tok.text.split()))
        elif tok.text:
            parts.append(tok.text)
    return "".join(parts)


@dataclass(slots=True)
class RoundTripReport:
    file_id: str
    ast_equal: bool = False
    text_equal_ignoring_whitespace: bool = False
    python_token_count: int = 0
    simpy_token_count: int = 0
    py_to_simpy_us: float = 0.0
    simpy_to_py_us: float = 0.0
    error_stage: str | None = None
    error: str | None = None

    def row(self) -> dict:
        return asdict(self)


def roundtrip_check(source: str, table: GrammarTokenTable | None = None, file_id: str = "<memory>") -> RoundTripReport:
    """Run py -> simpy -> py and report equality plus timing.

    Failures are recorded in the report (stage + message) instead of being
    raised, so corpus-scale runs always produce one row per file.
    """
    table = table or default_table()
    report = RoundTripReport(file_id=file_id)
    try:
        tree = parse_python(source)
    except SimpykitError as exc:
        report.error_stage, report.error = "parse_python", str(exc)
        return report
    try:
        report.python_token_count = count_python_tokens(source)
        t0 = time.perf_counter_ns()
        simpy_text = emit_simpy(tree, table)
        report.py_to_simpy_us = (time.perf_counter_ns() - t0) / 1000.0
        report.simpy_token_count = count_simpy_tokens(simpy_text, table)
    except SimpykitError as exc:
        report.error_stage, report.error = "emit_simpy", str(exc)
        return report
    try:
        t0 = time.perf_counter_ns()
        back_tree = parse_simpy(simpy_text, table)
        python_text = emit_python(back_tree)
        report.simpy_to_py_us = (time.perf_counter_ns() - t0) / 1000.0
    except SimpykitError as exc:
        report.error_stage, report.error = "simpy_to_py", str(exc)
        return report
    try:
        final_tree = parse_python(python_text)
    except SimpykitError as exc:
        report.error_stage, report.error = "reparse_python", str(exc)
        return report
    report.ast_equal = ast_equal(tree, final_tree)
    stripped_src = strip_code_whitespace(source)
    stripped_out = strip_code_whitespace(python_text)
    if stripped_src == stripped_out:
        report.text_equal_ignoring_whitespace = True
    else:
        # tolerate removable parentheses: compare against the canonical
        # rendering of the original tree instead of the raw source
        report.text_equal_ignoring_whitespace = (
            strip_code_whitespace(emit_python(tree)) == stripped_out
        )
    return report


def reports_to_csv(reports: list[RoundTripReport]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_FIELDS)
    writer.writeheader()
    for r in reports:
        writer.writerow(r.row())
    return buf.getvalue()


def reports_to_jsonl(reports: list[RoundTripReport]) -> str:
    return "\n".join(json.dumps(r.row()) for r in reports) + ("\n" if reports else "")


# --- differential fuzzing ---------------------------------------------------


@dataclass(slots=True)
class FuzzSummary:
    cases: int = 0
    failures: int = 0
    max_lookahead: int = 0
    backtracks: int = 0
    counterexamples: list = field(default_factory=list)  # (seed_index, dump, reason)

    @property
    def ok(self) -> bool:
        return self.failures == 0


def check_tree(tree, table: GrammarTokenTable, stats: dict | None = None) -> str | None:
    """All converter laws for one tree; returns a reason string on failure."""
    try:
        py_text = emit_python(tree)
    except SimpykitError as exc:
        return f"emit_python failed: {exc}"
    try:
        reparsed = parse_python(py_text)
    except SimpykitError as exc:
        return f"python adjunction parse failed: {exc}"
    if not ast_equal(tree, reparsed):
        return "python adjunction broke structural equality"
    try:
        simpy_text = emit_simpy(tree, table)
    except SimpykitError as exc:
        return f"emit_simpy failed: {exc}"
    try:
        back = parse_simpy(simpy_text, table, stats=stats)
    except SimpykitError as exc:
        return f"simpy adjunction parse failed: {exc}"
    if not ast_equal(tree, back):
        return "simpy adjunction broke structural equality"
    try:
        converted = py_to_simpy(py_text, table)
    except SimpykitError as exc:
        return f"py_to_simpy failed: {exc}"
    if converted != simpy_text:
        return "py_to_simpy is not emit_simpy after parse (byte mismatch)"
    return None


def fuzz_roundtrip(seed: int, n: int, table: GrammarTokenTable | None = None, shrink: bool = True) -> FuzzSummary:
    """Generate n random trees and check every conversion law on each."""
    from .gen import TreeGenerator, shrink_tree
    from .treeops import ast_dump

    if n < 1:
        raise ValueError("n must be >= 1")
    table = table or default_table()
    gen = TreeGenerator(seed)
    summary = FuzzSummary()
    for index in range(n):
        tree = gen.module()
        stats: dict = {}
        reason = check_tree(tree, table, stats=stats)
        summary.cases += 1
        summary.max_lookahead = max(summary.max_lookahead, stats.get("max_lookahead", 0))
        summary.backtracks += stats.get("backtracks", 0)
        if reason is not None:
            summary.failures += 1
            if shrink:
                tree = shrink_tree(tree, lambda t: check_tree(t, table) is not None)
                reason = check_tree(tree, table) or reason
            if len(summary.counterexamples) < 10:
                summary.counterexamples.append((index, ast_dump(tree), reason))
    return summary
