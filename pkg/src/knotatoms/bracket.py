"""Kauffman bracket by exhaustive state sum, and the span bound.

A state picks one smoothing per crossing.  The black smoothing joins the
black corners (slots 0-1 and 2-3) and carries a factor ``a``; the white
smoothing joins slots 1-2 and 3-0 and carries ``a**-1``.  A state with
``g`` loops contributes ``(-a**2 - a**-2)**(g - 1)``.  Bit ``i`` of a state
index is 1 when crossing ``i`` is smoothed black.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from knotatoms.atom import build_atom
from knotatoms.diagram import Diagram
from knotatoms.laurent import LaurentPoly

__all__ = [
    "DEFAULT_LIMIT",
    "LIMIT_ENV_VAR",
    "SpanReport",
    "StateSumTooLarge",
    "UnionFind",
    "default_limit",
    "kauffman_bracket",
    "loop_count",
    "partition_states",
    "span_bound_report",
    "state_sum",
]

DEFAULT_LIMIT = 24
LIMIT_ENV_VAR = "KNOTATOMS_STATE_LIMIT"
CHUNK_BITS = 14

LOOP_VALUE = LaurentPoly({2: -1, -2: -1})


class StateSumTooLarge(RuntimeError):
    """The diagram has more crossings than the configured state-sum limit."""


def default_limit() -> int:
    value = os.environ.get(LIMIT_ENV_VAR)
    return int(value) if value else DEFAULT_LIMIT


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)
            self.count -= 1


def _partners(d: Diagram) -> tuple[np.ndarray, np.ndarray]:
    black = np.empty(d.ndarts, dtype=np.int32)
    white = np.empty(d.ndarts, dtype=np.int32)
    for c in d.crossings:
        for s, x in enumerate(c):
            black[x] = c[s ^ 1]
            white[x] = c[3 - s]
    return black, white


def loop_count(d: Diagram, state: int) -> int:
    """Loops of one state, by union-find over arcs and smoothing joins."""
    if d.n == 0:
        return 1
    uf = UnionFind(d.ndarts)
    for x, y in d.arcs():
        uf.union(x, y)
    for i, c in enumerate(d.crossings):
        if state >> i & 1:
            uf.union(c[0], c[1])
            uf.union(c[2], c[3])
        else:
            uf.union(c[1], c[2])
            uf.union(c[3], c[0])
    return uf.count


def _state_counts(d: Diagram, start: int, stop: int) -> Counter:
    """Histogram of (black smoothings, loops) over state indices in [start, stop).

    Loops are counted as cycles of ``dart -> smoothing(pairing(dart))``;
    every loop splits into exactly two such cycles.  Cycles are found for a
    whole block of states at once by pointer doubling on minimal labels.
    """
    n, m = d.n, d.ndarts
    black, white = _partners(d)
    pairing = np.asarray(d.pairing, dtype=np.int64)
    cross = np.asarray([d.crossing_of(x) for x in range(m)], dtype=np.int64)
    black_f = black[pairing]
    white_f = white[pairing]
    cross_f = cross[pairing]
    ident = np.arange(m, dtype=np.int32)
    rounds = max(1, math.ceil(math.log2(m)))
    counts: Counter = Counter()
    step = 1 << CHUNK_BITS
    for lo in range(start, stop, step):
        states = np.arange(lo, min(stop, lo + step), dtype=np.int64)
        bits = (states[:, None] >> np.arange(n, dtype=np.int64)) & 1
        f = np.where(bits[:, cross_f].astype(bool), black_f, white_f).astype(np.int32)
        label = np.broadcast_to(ident, f.shape).copy()
        for _ in range(rounds):
            label = np.minimum(label, np.take_along_axis(label, f, axis=1))
            f = np.take_along_axis(f, f, axis=1)
        loops = (label == ident).sum(axis=1) // 2
        nblack = bits.sum(axis=1)
        key = nblack * (m + 1) + loops
        for k, v in zip(*np.unique(key, return_counts=True)):
            counts[(int(k) // (m + 1), int(k) % (m + 1))] += int(v)
    return counts


def _polynomial(counts: Counter, n: int) -> LaurentPoly:
    total = LaurentPoly()
    for (nblack, loops), mult in sorted(counts.items()):
        total = total + LaurentPoly.monomial(2 * nblack - n, mult) * LOOP_VALUE ** (loops - 1)
    return total


def state_sum(d: Diagram, start: int = 0, stop: int | None = None) -> LaurentPoly:
    """Contribution of the states with index in ``[start, stop)``."""
    if d.n == 0:
        return LaurentPoly({0: 1}) if start == 0 and (stop is None or stop > 0) else LaurentPoly()
    stop = 1 << d.n if stop is None else stop
    return _polynomial(_state_counts(d, start, stop), d.n)


def partition_states(n: int, parts: int) -> list[tuple[int, int]]:
    """Split ``range(2**n)`` into ``parts`` contiguous nonempty ranges."""
    total = 1 << n
    parts = max(1, min(parts, total))
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(parts)]


def _check_limit(d: Diagram, limit: int | None) -> None:
    limit = default_limit() if limit is None else limit
    if d.n > limit:
        raise StateSumTooLarge(f"{d.n} crossings exceeds the state-sum limit of {limit}")


def kauffman_bracket(d: Diagram, limit: int | None = None, workers: int = 1) -> LaurentPoly:
    """Exact bracket polynomial; refuses diagrams above ``limit`` crossings.

    With ``workers > 1`` the state range is split and summed in a thread
    pool.  The result does not depend on the split.
    """
    _check_limit(d, limit)
    if d.n == 0:
        return LaurentPoly({0: 1})
    ranges = partition_states(d.n, max(workers, (1 << d.n) >> CHUNK_BITS))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda r: _state_counts(d, *r), ranges))
    else:
        parts = [_state_counts(d, *r) for r in ranges]
    counts: Counter = Counter()
    for part in parts:
        counts.update(part)
    return _polynomial(counts, d.n)


@dataclass(frozen=True)
class SpanReport:
    span: int
    n: int
    chi: int
    bound: int
    equality: bool

    def to_dict(self) -> dict:
        return asdict(self)


def span_bound_report(d: Diagram, limit: int | None = None) -> SpanReport:
    """Compare the bracket span with ``4n + 2(chi - 2)``.

    Raises ``AssertionError`` if the span exceeds the bound, which would
    mean a bug somewhere in the state sum or the atom.
    """
    poly = kauffman_bracket(d, limit)
    chi = build_atom(d).chi
    bound = 4 * d.n + 2 * (chi - 2)
    s = poly.span()
    if s > bound:
        raise AssertionError(f"span {s} exceeds bound {bound}")
    return SpanReport(span=s, n=d.n, chi=chi, bound=bound, equality=s == bound)
