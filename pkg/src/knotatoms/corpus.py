"""Named diagram corpora stored as ``name | format | code | expected`` lines."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

__all__ = ["CorpusEntry", "bundled_corpus_path", "load_corpus", "parse_corpus"]


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    format: str
    code: str
    expected: dict = field(default_factory=dict)
    knot: str | None = None
    tag: str | None = None
    line: int = 0
    error: str | None = None


_BOOL = {"true": True, "false": False}


def _parse_expected(text: str) -> tuple[dict, str | None, str | None]:
    expected: dict = {}
    knot = None
    tag_match = re.search(r"\[([A-Z]+)\]", text)
    tag = tag_match.group(1) if tag_match else None
    for key, value in re.findall(r"(\w+)=(\S+)", text):
        if key == "knot":
            knot = None if value == "-" else value
        elif value in _BOOL:
            expected[key] = _BOOL[value]
        else:
            expected[key] = int(value)
    return expected, knot, tag


def parse_corpus(text: str) -> list[CorpusEntry]:
    """Parse corpus text; malformed lines become entries carrying ``error``."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split(" | ")]
        if len(parts) < 3:
            name = parts[0] if parts else f"line{lineno}"
            entries.append(CorpusEntry(name, "", "", line=lineno, error="expected 'name | format | code'"))
            continue
        name, fmt, code = parts[:3]
        try:
            expected, knot, tag = _parse_expected(parts[3]) if len(parts) > 3 else ({}, None, None)
        except ValueError as exc:
            entries.append(CorpusEntry(name, fmt, code, line=lineno, error=f"bad expected values: {exc}"))
            continue
        entries.append(CorpusEntry(name, fmt, code, expected, knot, tag, lineno))
    return entries


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("knotatoms") / "data" / "corpus.txt"))


def load_corpus(path: str | Path | None = None) -> list[CorpusEntry]:
    path = bundled_corpus_path() if path is None else Path(path)
    return parse_corpus(path.read_text(encoding="utf-8"))
