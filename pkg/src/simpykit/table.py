"""The grammar token table: the data that defines SimPy.

Every mapping between a Python terminal and its SimPy rendering lives here
as data, not code.  The frontends resolve terminals through the table at
runtime, so swapping in a different roster (same semantic entries, other
spellings) retargets the whole toolkit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .errors import TableError

DEFAULT_PLACEHOLDER_COUNT = 78

PLACEHOLDER_RE = re.compile(r"<[a-z_]+>\Z")

REPLACE = "replace"
MERGE = "merge"
DROP = "drop"
SPACE = "space"
_ACTIONS = (REPLACE, MERGE, DROP, SPACE)

# Well-known synthetic terminal spellings used in the shipped table.
T_BLOCK_START = "NEWLINE+INDENT"
T_BLOCK_END = "DEDENT"
T_LINE_SEP = "NEWLINE"
T_CONCAT = "STRING+STRING"
T_COMMENT = "COMMENT"
T_NOT_IN = "not+in"
T_IS_NOT = "is+not"

# Context labels referenced from the frontends.
CTX_GLOBAL = "global"
CTX_IF_STMT = "if_stmt"
CTX_FOR_STMT = "for_stmt"
CTX_ELSE_BLOCK = "else_block"
CTX_TERNARY = "conditional_expression"
CTX_COMP = "comprehension"
CTX_IMPORT_FROM = "import_from"
CTX_RAISE = "raise_stmt"
CTX_COMPARISON = "comparison"
CTX_STAR_PARAM = "star_param"
CTX_KWONLY_MARK = "keyword_only_marker"
CTX_DSTAR_PARAM = "double_star_param"
CTX_POSONLY_MARK = "posonly_marker"
CTX_STARRED = "starred_expression"
CTX_UNPACK = "unpacking"
CTX_DECORATOR = "decorator"
CTX_IMPORT_STAR = "import_from_targets"
CTX_LAMBDA = "lambda_def"
CTX_BLOCK = "block"
CTX_SIMPLE_STMTS = "simple_stmts"
CTX_STRING_CONCAT = "string_concat"
CTX_COMMENT = "comment"
CTX_WITH = "with_stmt"
CTX_PARAMS = "parameters"


@dataclass(slots=True, frozen=True)
class TableEntry:
    context: str
    action: str  # replace | merge | drop | space
    terminal: str  # merge sources joined with '+'
    token: str | None  # placeholder text; None for drop/space

    @property
    def merge_sources(self) -> tuple[str, ...]:
        return tuple(self.terminal.split("+"))


@dataclass(slots=True)
class GrammarTokenTable:
    entries: list = field(default_factory=list)
    version: str = "1"
    _by_key: dict = field(init=False, repr=False, default_factory=dict)
    _by_token: dict = field(init=False, repr=False, default_factory=dict)
    _ph_pattern: object = field(init=False, repr=False, default=None)

    def __post_init__(self) -> None:
        for e in self.entries:
            key = (e.terminal, e.context)
            if key in self._by_key:
                raise TableError(f"duplicate rule for terminal {e.terminal!r} in context {e.context!r}")
            self._by_key[key] = e
            if e.token is not None:
                if e.token in self._by_token:
                    raise TableError(f"duplicate placeholder {e.token}")
                self._by_token[e.token] = e

    def lookup(self, terminal: str, context: str = CTX_GLOBAL) -> TableEntry | None:
        """Most-specific rule for a terminal; None means retained verbatim."""
        entry = self._by_key.get((terminal, context))
        if entry is None and context != CTX_GLOBAL:
            entry = self._by_key.get((terminal, CTX_GLOBAL))
        return entry

    def token(self, terminal: str, context: str = CTX_GLOBAL) -> str | None:
        entry = self.lookup(terminal, context)
        return entry.token if entry is not None else None

    def require_token(self, terminal: str, context: str = CTX_GLOBAL) -> str:
        tok = self.token(terminal, context)
        if tok is None:
            raise TableError(f"table has no placeholder for {terminal!r} in context {context!r}")
        return tok

    def entry_for_placeholder(self, text: str) -> TableEntry | None:
        return self._by_token.get(text)

    @property
    def placeholders(self) -> tuple[str, ...]:
        return tuple(self._by_token)

    def placeholder_pattern(self) -> re.Pattern:
        """Regex matching exactly the table's placeholder literals (cached)."""
        if self._ph_pattern is None:
            alts = sorted(self._by_token, key=len, reverse=True)
            self._ph_pattern = re.compile("|".join(re.escape(a) for a in alts))
        return self._ph_pattern


def parse_table_text(text: str, version: str = "1") -> GrammarTokenTable:
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = raw.split("\t")
        if len(cols) != 4:
            raise TableError(f"line {lineno}: expected 4 tab-separated columns, got {len(cols)}")
        context, action, terminal, token = (c.strip() for c in cols)
        if action not in _ACTIONS:
            raise TableError(f"line {lineno}: unknown action {action!r}")
        if action in (DROP, SPACE):
            if token not in ("-", ""):
                raise TableError(f"line {lineno}: {action} entries carry no token")
            if context == CTX_GLOBAL:
                raise TableError(f"line {lineno}: {action} entries must name their production")
            entries.append(TableEntry(context, action, terminal, None))
            continue
        if not PLACEHOLDER_RE.match(token):
            raise TableError(f"line {lineno}: bad placeholder {token!r}")
        if action == MERGE and len(terminal.split("+")) < 2:
            raise TableError(f"line {lineno}: merge entries need at least two source terminals")
        entries.append(TableEntry(context, action, terminal, token))
    return GrammarTokenTable(entries=entries, version=version)


def load_table(path: str | Path | None = None, expected_placeholders: int | None = None) -> GrammarTokenTable:
    """Load and validate a table; None loads the shipped default.

    The shipped default must define exactly 78 placeholders; explicit
    files are validated for structure only, unless a count is requested.
    """
    if path is None:
        text = resources.files("simpykit.data").joinpath("simpy_table.tsv").read_text("utf-8")
        if expected_placeholders is None:
            expected_placeholders = DEFAULT_PLACEHOLDER_COUNT
    else:
        text = Path(path).read_text("utf-8")
    table = parse_table_text(text)
    if expected_placeholders is not None and len(table.placeholders) != expected_placeholders:
        raise TableError(
            f"expected {expected_placeholders} placeholders, table defines {len(table.placeholders)}"
        )
    return table


def export_table(table: GrammarTokenTable, path: str | Path) -> None:
    lines = ["# SimPy grammar token table"]
    for e in table.entries:
        lines.append(f"{e.context}\t{e.action}\t{e.terminal}\t{e.token or '-'}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


_default: GrammarTokenTable | None = None


def default_table() -> GrammarTokenTable:
    global _default
    if _default is None:
        _default = load_table()
    return _default
