"""Corpus-level token reduction measurement.

For every corpus file the Python text is tokenized under a base
vocabulary and its SimPy conversion under the placeholder-extended one;
the report aggregates corpus sums, which is how reduction percentages are
defined (not as a mean of per-file ratios).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .bpe import BpeVocab, extend_vocab, tokenize
from .convert import py_to_simpy
from .errors import SimpykitError
from .table import GrammarTokenTable, default_table


@dataclass(slots=True)
class FileReduction:
    file_id: str
    python_tokens: int
    simpy_tokens: int

    @property
    def reduction_percent(self) -> float:
        if self.python_tokens == 0:
            return 0.0
        return 100.0 * (1.0 - self.simpy_tokens / self.python_tokens)


@dataclass(slots=True)
class ReductionReport:
    vocab_name: str
    python_tokens: int = 0
    simpy_tokens: int = 0
    files: list = field(default_factory=list)  # FileReduction rows
    skipped: int = 0  # files that failed to parse

    @property
    def reduction_percent(self) -> float:
        if self.python_tokens == 0:
            return 0.0
        return 100.0 * (1.0 - self.simpy_tokens / self.python_tokens)

    def to_json(self) -> str:
        doc = {
            "vocab": self.vocab_name,
            "python_tokens": self.python_tokens,
            "simpy_tokens": self.simpy_tokens,
            "reduction_percent": round(self.reduction_percent, 2),
            "skipped": self.skipped,
            "files": [
                {**asdict(f), "reduction_percent": round(f.reduction_percent, 2)}
                for f in self.files
            ],
        }
        return json.dumps(doc, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["file_id", "python_tokens", "simpy_tokens", "reduction_percent"])
        for f in self.files:
            writer.writerow([f.file_id, f.python_tokens, f.simpy_tokens, f"{f.reduction_percent:.2f}"])
        writer.writerow(["TOTAL", self.python_tokens, self.simpy_tokens, f"{self.reduction_percent:.2f}"])
        return buf.getvalue()


def corpus_files(corpus_dir: str | Path) -> list[Path]:
    return sorted(Path(corpus_dir).rglob("*.py"))


def compare_corpus(
    corpus_dir: str | Path,
    vocab: BpeVocab,
    table: GrammarTokenTable | None = None,
) -> ReductionReport:
    table = table or default_table()
    extended = extend_vocab(vocab, table)
    report = ReductionReport(vocab_name=vocab.name)
    for path in corpus_files(corpus_dir):
        source = path.read_text("utf-8")
        try:
            simpy_text = py_to_simpy(source, table)
        except SimpykitError:
            report.skipped += 1
            continue
        row = FileReduction(
            file_id=path.name,
            python_tokens=len(tokenize(vocab, source)),
            simpy_tokens=len(tokenize(extended, simpy_text)),
        )
        report.files.append(row)
        report.python_tokens += row.python_tokens
        report.simpy_tokens += row.simpy_tokens
    return report


def summary_table(reports: list[ReductionReport]) -> str:
    """Fixed-width summary, one row per vocabulary."""
    lines = [f"{'vocab':<24} {'python':>10} {'simpy':>10} {'reduction':>10}"]
    for r in reports:
        lines.append(
            f"{r.vocab_name:<24} {r.python_tokens:>10} {r.simpy_tokens:>10} {r.reduction_percent:>9.1f}%"
        )
    return "\n".join(lines)
