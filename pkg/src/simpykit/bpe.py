"""Byte-level BPE: vocabularies, tokenization, and a small trainer.

Vocabularies use the common interchange format (``vocab.json`` mapping
token string to id, ``merges.txt`` with one space-separated symbol pair per
line) and the byte-to-printable-unicode symbol alphabet that format
implies, so externally published files load directly.

Two pre-tokenization schemes are supported: ``web`` (the classic
web-corpus scheme: letters, digit runs, punctuation runs, whitespace
lookahead) and ``code`` (a newer-generation scheme where one symbol may
prefix a letter run, which is what lets text like ``(nums`` become a
single token).  Extending a vocabulary with grammar placeholders adds each
placeholder as one atomic token and makes the pre-tokenizer treat it as
unsplittable.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import VocabError
from .table import GrammarTokenTable

_WEB_PATTERN = re.compile(
    r"'(?:[sdmt]|ll|ve|re)"
    r"| ?[^\W\d_]+"
    r"| ?\d+"
    r"| ?(?:[^\s\w]|_)+"
    r"|\s+(?!\S)"
    r"|\s+"
)

_CODE_PATTERN = re.compile(
    r"'(?:[sdmt]|ll|ve|re)"
    r"|(?:[^\w\r\n]|_)?[^\W\d_]+"
    r"|\d{1,3}"
    r"| ?(?:[^\s\w]|_)+[\r\n]*"
    r"|\s*[\r\n]+"
    r"|\s+(?!\S)"
    r"|\s+"
)

PATTERNS = {"web": _WEB_PATTERN, "code": _CODE_PATTERN}


def bytes_to_unicode() -> dict[int, str]:
    """The standard byte-to-printable-char mapping of the vocab format."""
    bs = list(range(ord("!"), ord("~") + 1)) + list(range(ord("¡"), ord("¬") + 1)) + list(range(ord("®"), ord("ÿ") + 1))
    cs = bs[:]
    n = 0
    for b in range(256):
        if b not in bs:
            bs.append(b)
            cs.append(256 + n)
            n += 1
    return dict(zip(bs, (chr(c) for c in cs)))


_B2U = bytes_to_unicode()
_U2B = {v: k for k, v in _B2U.items()}


def text_to_symbols(piece: str) -> list[str]:
    return [_B2U[b] for b in piece.encode("utf-8")]


@dataclass(slots=True)
class BpeVocab:
    token_to_id: dict
    merges: list  # ordered (left, right) symbol pairs
    pattern: str = "web"  # pre-tokenization scheme name
    name: str = "unnamed"
    byte_level: bool = True
    placeholders: tuple = ()  # atomic extension tokens, in id order
    _ranks: dict = field(init=False, repr=False, default_factory=dict)
    _cache: dict = field(init=False, repr=False, default_factory=dict)
    _id_to_token: list = field(init=False, repr=False, default_factory=list)
    _ph_regex: object = field(init=False, repr=False, default=None)

    def __post_init__(self) -> None:
        ids = sorted(self.token_to_id.values())
        if ids != list(range(len(ids))):
            raise VocabError("token ids are not dense in [0, vocab size)")
        self._ranks = {pair: i for i, pair in enumerate(self.merges)}
        self._id_to_token = [None] * len(self.token_to_id)
        for tok, i in self.token_to_id.items():
            self._id_to_token[i] = tok
        if self.placeholders:
            alts = sorted(self.placeholders, key=len, reverse=True)
            self._ph_regex = re.compile("(" + "|".join(re.escape(a) for a in alts) + ")")

    def __len__(self) -> int:
        return len(self.token_to_id)

    @property
    def is_extended(self) -> bool:
        return bool(self.placeholders)

    # --- encoding -----------------------------------------------------------

    def _bpe(self, piece: str) -> list[str]:
        cached = self._cache.get(piece)
        if cached is not None:
            return cached
        symbols = text_to_symbols(piece)
        ranks = self._ranks
        while len(symbols) >= 2:
            best = None
            best_rank = None
            for pair in zip(symbols, symbols[1:]):
                r = ranks.get(pair)
                if r is not None and (best_rank is None or r < best_rank):
                    best = pair
                    best_rank = r
            if best is None:
                break
            merged = best[0] + best[1]
            out = []
            i = 0
            while i < len(symbols):
                if i < len(symbols) - 1 and symbols[i] == best[0] and symbols[i + 1] == best[1]:
                    out.append(merged)
                    i += 2
                else:
                    out.append(symbols[i])
                    i += 1
            symbols = out
        if len(self._cache) < 200_000:
            self._cache[piece] = symbols
        return symbols

    def encode(self, text: str) -> list[int]:
        t2i = self.token_to_id
        ids: list[int] = []
        segments = self._ph_regex.split(text) if self._ph_regex else [text]
        for si, segment in enumerate(segments):
            if not segment:
                continue
            if self._ph_regex is not None and si % 2 == 1:
                ids.append(t2i[segment])
                continue
            for m in PATTERNS[self.pattern].finditer(segment):
                for sym in self._bpe(m.group()):
                    try:
                        ids.append(t2i[sym])
                    except KeyError:
                        # symbols created by foreign merges fall back to bytes
                        ids.extend(t2i[c] for c in sym)
        return ids

    def decode(self, ids: list[int]) -> str:
        ph = set(self.placeholders)
        chunks: list[str] = []
        byte_buf = bytearray()
        for i in ids:
            tok = self._id_to_token[i]
            if tok in ph:
                if byte_buf:
                    chunks.append(byte_buf.decode("utf-8"))
                    byte_buf = bytearray()
                chunks.append(tok)
            else:
                byte_buf.extend(_U2B[c] for c in tok)
        if byte_buf:
            chunks.append(byte_buf.decode("utf-8"))
        return "".join(chunks)


def load_vocab(vocab_file: str | Path, merges_file: str | Path, pattern: str = "web", name: str | None = None) -> BpeVocab:
    """Load an interchange-format vocabulary pair."""
    try:
        token_to_id = json.loads(Path(vocab_file).read_text("utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise VocabError(f"cannot read vocab file: {exc}") from exc
    if not isinstance(token_to_id, dict) or not all(isinstance(v, int) for v in token_to_id.values()):
        raise VocabError("vocab file must map token strings to integer ids")
    merges: list[tuple[str, str]] = []
    known = set(token_to_id)
    for lineno, line in enumerate(Path(merges_file).read_text("utf-8").splitlines(), start=1):
        if not line or line.startswith("#"):
            continue
        parts = line.split(" ")
        if len(parts) != 2:
            raise VocabError(f"merges line {lineno}: expected two symbols")
        a, b = parts
        if a not in known or b not in known:
            raise VocabError(f"merges line {lineno}: unknown symbol in {a!r} {b!r}")
        if a + b not in known:
            raise VocabError(f"merges line {lineno}: merged symbol {a + b!r} missing from vocab")
        merges.append((a, b))
    return BpeVocab(
        token_to_id=token_to_id, merges=merges, pattern=pattern,
        name=name or Path(vocab_file).stem,
    )


def save_vocab(vocab: BpeVocab, vocab_file: str | Path, merges_file: str | Path) -> None:
    Path(vocab_file).write_text(
        json.dumps(vocab.token_to_id, ensure_ascii=False, separators=(",", ":")), "utf-8"
    )
    lines = ["#version: 0.2"] + [f"{a} {b}" for a, b in vocab.merges]
    Path(merges_file).write_text("\n".join(lines) + "\n", "utf-8")


def extend_vocab(vocab: BpeVocab, table: GrammarTokenTable) -> BpeVocab:
    """Append each table placeholder as one atomic token with a fresh id."""
    if vocab.is_extended:
        raise VocabError("vocabulary is already extended with placeholders")
    new_tokens = table.placeholders
    collisions = [t for t in new_tokens if t in vocab.token_to_id]
    if collisions:
        raise VocabError(f"placeholder already present in vocab: {collisions[0]}")
    token_to_id = dict(vocab.token_to_id)
    base = len(token_to_id)
    for i, tok in enumerate(new_tokens):
        token_to_id[tok] = base + i
    return BpeVocab(
        token_to_id=token_to_id, merges=list(vocab.merges), pattern=vocab.pattern,
        name=vocab.name + "+placeholders", placeholders=tuple(new_tokens),
    )


def tokenize(vocab: BpeVocab, text: str) -> list[int]:
    return vocab.encode(text)


def detokenize(vocab: BpeVocab, ids: list[int]) -> str:
    return vocab.decode(ids)


# --- training ----------------------------------------------------------------


def train_bpe(texts: list[str], num_merges: int, pattern: str = "web", name: str = "trained") -> BpeVocab:
    """Train merges on a corpus; deterministic for a fixed input.

    Works on unique pre-token pieces weighted by frequency, with
    incremental pair-count maintenance, so merge count (not corpus size)
    dominates the cost.  Ties break toward the lexicographically smallest
    pair.
    """
    pat = PATTERNS[pattern]
    piece_counts: dict[str, int] = {}
    for text in texts:
        for m in pat.finditer(text):
            piece = m.group()
            piece_counts[piece] = piece_counts.get(piece, 0) + 1

    words = [(list(text_to_symbols(p)), c) for p, c in sorted(piece_counts.items())]
    pair_counts: dict[tuple[str, str], int] = {}
    pair_words: dict[tuple[str, str], set[int]] = {}
    for wi, (syms, count) in enumerate(words):
        for pair in zip(syms, syms[1:]):
            pair_counts[pair] = pair_counts.get(pair, 0) + count
            pair_words.setdefault(pair, set()).add(wi)

    merges: list[tuple[str, str]] = []
    for _ in range(num_merges):
        best = None
        best_count = 1  # a pair must occur at least twice to be worth a merge
        for pair, count in pair_counts.items():
            if count > best_count or (count == best_count and best is not None and count > 1 and pair < best):
                best = pair
                best_count = count
        if best is None:
            break
        merges.append(best)
        merged = best[0] + best[1]
        for wi in list(pair_words.get(best, ())):
            syms, count = words[wi]
            i = 0
            while i < len(syms) - 1:
                if syms[i] == best[0] and syms[i + 1] == best[1]:
                    left = syms[i - 1] if i > 0 else None
                    right = syms[i + 2] if i + 2 < len(syms) else None
                    _bump(pair_counts, pair_words, (syms[i], syms[i + 1]), -count, wi)
                    if left is not None:
                        _bump(pair_counts, pair_words, (left, syms[i]), -count, wi)
                        _bump(pair_counts, pair_words, (left, merged), count, wi)
                    if right is not None:
                        _bump(pair_counts, pair_words, (syms[i + 1], right), -count, wi)
                        _bump(pair_counts, pair_words, (merged, right), count, wi)
                    syms[i : i + 2] = [merged]
                else:
                    i += 1
        pair_counts.pop(best, None)
        pair_words.pop(best, None)

    token_to_id: dict[str, int] = {}
    for b in range(256):
        token_to_id[_B2U[b]] = len(token_to_id)
    for a, b in merges:
        tok = a + b
        if tok not in token_to_id:
            token_to_id[tok] = len(token_to_id)
    return BpeVocab(token_to_id=token_to_id, merges=merges, pattern=pattern, name=name)


def _bump(pair_counts, pair_words, pair, delta, wi) -> None:
    new = pair_counts.get(pair, 0) + delta
    if new <= 0:
        pair_counts.pop(pair, None)
    else:
        pair_counts[pair] = new
    if delta > 0:
        pair_words.setdefault(pair, set()).add(wi)
