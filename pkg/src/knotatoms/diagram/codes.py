"""Text formats: PD codes, signed Gauss codes and braid words."""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass

from knotatoms.diagram.core import Diagram, DiagramError, components

__all__ = [
    "BraidWord",
    "LongDiagram",
    "ParseError",
    "parse_braid",
    "parse_gauss",
    "parse_long_gauss",
    "parse_pd",
    "serialize_pd",
]


class ParseError(ValueError):
    """Malformed input text.  ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, text: str = "", offset: int = 0):
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        self.message = message
        super().__init__(f"{message} (line {self.line}, column {self.column})")


def _tokenize(text: str, pattern: re.Pattern[str], what: str) -> list[re.Match[str]]:
    matches = []
    pos = 0
    skip = re.compile(r"[\s,;]*")
    while True:
        pos = skip.match(text, pos).end()
        if pos >= len(text):
            break
        m = pattern.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected input in {what}: {text[pos:pos + 12]!r}", text, pos)
        matches.append(m)
        pos = m.end()
    if not matches:
        raise ParseError(f"empty {what}", text, 0)
    return matches


_PD_TERM = re.compile(r"X\s*[(\[]([^)\]]*)[)\]]")


def parse_pd(text: str) -> Diagram:
    """Parse whitespace separated ``X(a,b,c,d)`` terms.

    Each term lists arc labels counterclockwise starting from the incoming
    understrand; the listing is reversed into clockwise slots.
    """
    text = text.strip()
    if text.startswith("PD"):
        inner = re.fullmatch(r"PD\s*[(\[](.*)[)\]]", text, re.S)
        if inner is None:
            raise ParseError("unbalanced PD wrapper", text, 0)
        text = inner.group(1)
    terms = _tokenize(text, _PD_TERM, "PD code")

    occurrences: dict[int, list[int]] = defaultdict(list)
    first_seen: dict[int, int] = {}
    crossings = []
    for i, m in enumerate(terms):
        parts = [p.strip() for p in m.group(1).split(",")]
        if len(parts) != 4:
            raise ParseError(f"crossing term has {len(parts)} labels, expected 4", text, m.start())
        labels = []
        for p in parts:
            if not p.isdigit() or int(p) <= 0:
                raise ParseError(f"arc label {p!r} is not a positive integer", text, m.start(1))
            labels.append(int(p))
        for pos, label in enumerate(labels):
            occurrences[label].append(4 * i + pos)
            first_seen.setdefault(label, m.start())
        crossings.append((4 * i, 4 * i + 3, 4 * i + 2, 4 * i + 1))

    pairing = [0] * (4 * len(terms))
    for label, darts in sorted(occurrences.items()):
        if len(darts) != 2:
            raise ParseError(f"arc label {label} appears {len(darts)} times, expected 2", text,
                             first_seen[label])
        a, b = darts
        pairing[a], pairing[b] = b, a
    try:
        d = Diagram(tuple(crossings), tuple(pairing))
    except DiagramError as exc:
        raise ParseError(str(exc), text, 0) from exc
    label_of = {x: label for label, darts in occurrences.items() for x in darts}
    return _orient_as_written(d, label_of)


def _orient_as_written(d: Diagram, label_of: dict[int, int]) -> Diagram:
    """Renumber darts so each component's lowest dart enters along the PD orientation.

    Understrands run from position ``a`` (dart ``4i``) to ``c``.  A component
    passing only over is oriented by increasing arc labels when that is
    unambiguous.  Reversing a component swaps the numbers of the entry and
    exit dart of each of its passages, which keeps the diagram isomorphic.
    """
    swap = {}
    for comp in components(d):
        entries = set(comp)
        under = [x for x in entries | {d.opposite(x) for x in comp} if d.slot_of(x) % 2 == 0]
        if under:
            reverse = not any(x % 4 == 0 for x in under if x in entries)
        else:
            seq = [label_of[x] for x in comp]
            steps = [(b - a) for a, b in zip(seq, seq[1:] + seq[:1])]
            reverse = len(seq) > 2 and sum(s == -1 for s in steps) == len(seq) - 1
        if reverse:
            for x in comp:
                y = d.opposite(x)
                swap[x], swap[y] = y, x
    if not swap:
        return d
    perm = [swap.get(x, x) for x in range(d.ndarts)]
    return Diagram(
        tuple(tuple(perm[x] for x in c) for c in d.crossings),
        tuple(perm[d.pairing[x]] for x in sorted(range(d.ndarts), key=perm.__getitem__)),
    )


def serialize_pd(d: Diagram) -> str:
    """Deterministic PD text.

    Arcs are numbered along the components of :func:`components`; each
    crossing is written from its incoming understrand, counterclockwise,
    in crossing-id order.  A diagram without crossings serializes to ``""``.
    """
    if d.n == 0:
        return ""
    label = {}
    incoming = set()
    k = 0
    for comp in components(d):
        for x in comp:
            k += 1
            label[x] = label[d.pairing[x]] = k
            incoming.add(x)
    terms = []
    for c in d.crossings:
        t = 0 if c[0] in incoming else 2
        ccw = [c[(t - j) % 4] for j in range(4)]
        terms.append("X(" + ",".join(str(label[x]) for x in ccw) + ")")
    return " ".join(terms)


_GAUSS_TOKEN = re.compile(r"([OUou])(\d+)([+\-−])")


def _gauss_passages(text: str) -> tuple[list[tuple[int, int]], int]:
    tokens = _tokenize(text.strip(), _GAUSS_TOKEN, "Gauss code")
    text = text.strip()
    index: dict[int, int] = {}
    roles: dict[int, dict[str, int]] = defaultdict(dict)
    signs: dict[int, int] = {}
    for m in tokens:
        role, ident = m.group(1).upper(), int(m.group(2))
        sign = 1 if m.group(3) == "+" else -1
        if role in roles[ident]:
            raise ParseError(f"crossing {ident} has two {role} passages", text, m.start())
        roles[ident][role] = m.start()
        if ident in signs and signs[ident] != sign:
            raise ParseError(f"sign mismatch for crossing {ident}", text, m.start())
        signs[ident] = sign
        index.setdefault(ident, len(index))
    for ident, r in roles.items():
        if len(r) != 2:
            missing = "U" if "O" in r else "O"
            raise ParseError(f"crossing {ident} has no {missing} passage", text, next(iter(r.values())))

    passages = []
    for m in tokens:
        ident = int(m.group(2))
        k = index[ident]
        if m.group(1).upper() == "U":
            passages.append((4 * k, 4 * k + 2))
        elif signs[ident] > 0:
            passages.append((4 * k + 1, 4 * k + 3))
        else:
            passages.append((4 * k + 3, 4 * k + 1))
    return passages, len(index)


def _gauss_pairing(passages: list[tuple[int, int]], n: int) -> list[int]:
    pairing = [-1] * (4 * n)
    m = len(passages)
    for i in range(m):
        out = passages[i][1]
        nxt = passages[(i + 1) % m][0]
        pairing[out], pairing[nxt] = nxt, out
    return pairing


def parse_gauss(text: str) -> Diagram:
    """Parse a signed Gauss code such as ``O1+U2+O3+U1+O2+U3+``.

    The rotation at each crossing is rebuilt from its sign: the overstrand
    enters one slot clockwise after the understrand at a positive crossing.
    Non-planar codes are accepted and give virtual diagrams.
    """
    passages, n = _gauss_passages(text)
    pairing = _gauss_pairing(passages, n)
    crossings = tuple(tuple(range(4 * k, 4 * k + 4)) for k in range(n))
    return Diagram(crossings, tuple(pairing))


@dataclass(frozen=True)
class LongDiagram:
    """A long knot diagram, stored as its closure plus the cut arc.

    ``start`` is the dart where the long strand enters its first crossing and
    ``end`` the dart where it leaves the last one; in the closure these two
    darts are paired.  Both are ``None`` for the crossingless long arc.
    """

    closure: Diagram
    start: int | None = None
    end: int | None = None

    def __post_init__(self) -> None:
        c = self.closure
        if len(components(c)) != 1:
            raise DiagramError("a long diagram has a single component")
        if c.n == 0:
            if self.start is not None or self.end is not None:
                raise DiagramError("crossingless long arc has no endpoint darts")
            return
        if self.start is None or self.end is None or c.pairing[self.end] != self.start:
            raise DiagramError("endpoints must be the two ends of one arc of the closure")

    @property
    def n(self) -> int:
        return self.closure.n

    @classmethod
    def cut(cls, d: Diagram, dart: int | None = None) -> LongDiagram:
        """Open ``d`` at the arc entering ``dart`` (default: lowest dart)."""
        if d.n == 0:
            return cls(d)
        start = 0 if dart is None else dart
        return cls(d, start, d.pairing[start])


def parse_long_gauss(text: str) -> LongDiagram:
    """A Gauss code read as a long knot: the first and last passages are the ends."""
    passages, n = _gauss_passages(text)
    pairing = _gauss_pairing(passages, n)
    crossings = tuple(tuple(range(4 * k, 4 * k + 4)) for k in range(n))
    closure = Diagram(crossings, tuple(pairing))
    return LongDiagram(closure, passages[0][0], passages[-1][1])


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strand_count`` strands as a list of ``(generator, exponent)``."""

    strand_count: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise ValueError("strand_count must be positive")
        object.__setattr__(self, "letters", tuple((int(i), int(j)) for i, j in self.letters))
        for i, j in self.letters:
            if not 1 <= i <= self.strand_count - 1:
                raise ValueError(f"generator s{i} out of range for {self.strand_count} strands")
            if j == 0:
                raise ValueError("exponents must be nonzero")

    def permutation(self) -> list[int]:
        """Image of each strand position (0-based) after the braid."""
        perm = list(range(self.strand_count))
        for i, j in self.letters:
            if j % 2:
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
        return perm

    def __str__(self) -> str:
        return " ".join(f"s{i}^{j}" for i, j in self.letters)


_BRAID_TOKEN = re.compile(r"(?:s|sigma_?)(\d+)(?:\^\{?(-?\d+)\}?)?")


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    """Parse ``s1^3 s2^-1``; an optional ``<strands>:`` prefix gives the strand count."""
    text = text.strip()
    m = re.match(r"(\d+)\s*:", text)
    if m:
        if strands is not None and strands != int(m.group(1)):
            raise ParseError("strand count given twice with different values", text, 0)
        strands = int(m.group(1))
        body = text[m.end():]
        offset = m.end()
    else:
        body, offset = text, 0
    letters = []
    if body.strip():
        for t in _tokenize(body, _BRAID_TOKEN, "braid word"):
            letters.append((int(t.group(1)), int(t.group(2) or 1)))
    elif strands is None:
        raise ParseError("empty braid word", text, offset)
    if strands is None:
        strands = max(i for i, _ in letters) + 1
    try:
        return BraidWord(strands, tuple(letters))
    except ValueError as exc:
        raise ParseError(str(exc), text, offset) from exc
