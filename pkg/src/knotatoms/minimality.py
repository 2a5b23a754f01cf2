"""Minimality certificates for good diagrams, and the checks around them.

A diagram is good when every crossing meets four distinct cells of its
atom.  A good diagram of a classical knot has the least number of crossings
among all classical diagrams of that knot; a good diagram of a framed
virtual link is minimal among framed diagrams; a long virtual knot whose
closure is good is minimal among long diagrams.  The certificates below
record which of these criteria applies and why it does or does not.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import asdict, dataclass, field
from typing import Iterator, NamedTuple

from knotatoms.atom import build_atom, goodness
from knotatoms.bracket import StateSumTooLarge, default_limit, kauffman_bracket
from knotatoms.diagram import (
    BraidWord,
    Diagram,
    LongDiagram,
    braid_closure,
    cable,
    faces,
    is_classical,
    is_knot,
    serialize_pd,
)

__all__ = [
    "BraidExample",
    "CablingReport",
    "Certificate",
    "MoveSites",
    "Site",
    "cabling_consistency",
    "certify_classical",
    "certify_framed",
    "certify_long",
    "chi_gap_required",
    "detect_reducing_moves",
    "enumerate_positive_braids",
    "generate_positive_braid",
]

MINIMAL_CLASSICAL = "minimal-classical"
MINIMAL_FRAMED = "minimal-framed"
MINIMAL_LONG = "minimal-long"
INCONCLUSIVE = "inconclusive"

THEOREM_CLASSICAL = "good classical knot diagram is minimal among classical diagrams"
THEOREM_FRAMED = "good framed virtual link diagram is minimal in the framed category"
THEOREM_LONG = "long virtual knot with good closure is minimal in the long category"


def digest(d: Diagram) -> str:
    code = serialize_pd(d) if d.n else "O"
    return "sha256:" + hashlib.sha256(code.encode()).hexdigest()


@dataclass(frozen=True)
class Certificate:
    input: str
    n: int
    classical: bool
    knot: bool
    good: bool
    chi: int
    span: int | None
    bound: int
    verdict: str
    theorem: str
    reason: str | None
    witnesses: list = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.verdict == MINIMAL_CLASSICAL:
            assert self.classical and self.knot and self.good
        elif self.verdict in (MINIMAL_FRAMED, MINIMAL_LONG):
            assert self.good
        elif self.verdict != INCONCLUSIVE:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def minimal(self) -> bool:
        return self.verdict != INCONCLUSIVE

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _certificate(d: Diagram, verdict_if_good: str, theorem: str, gates: list[tuple[str, bool]],
                 limit: int | None) -> Certificate:
    atom = build_atom(d)
    report = goodness(atom)
    limit = default_limit() if limit is None else limit
    try:
        span = kauffman_bracket(d, limit).span()
    except StateSumTooLarge:
        span = None
    reason = next((name for name, ok in gates if not ok), None)
    if reason is None and not report.good:
        reason = "not good"
    return Certificate(
        input=digest(d),
        n=d.n,
        classical=is_classical(d),
        knot=is_knot(d),
        good=report.good,
        chi=atom.chi,
        span=span,
        bound=4 * d.n + 2 * (atom.chi - 2),
        verdict=verdict_if_good if reason is None else INCONCLUSIVE,
        theorem=theorem,
        reason=reason,
        witnesses=[list(w) for w in report.witnesses],
    )


def certify_classical(d: Diagram, limit: int | None = None) -> Certificate:
    """Minimal among classical diagrams iff classical, a knot, and good.

    The verdict says nothing about virtual diagrams of the same knot.
    """
    gates = [("not classical", is_classical(d)), ("not a knot", is_knot(d))]
    return _certificate(d, MINIMAL_CLASSICAL, THEOREM_CLASSICAL, gates, limit)


def certify_framed(d: Diagram, limit: int | None = None) -> Certificate:
    return _certificate(d, MINIMAL_FRAMED, THEOREM_FRAMED, [], limit)


def certify_long(ld: LongDiagram, limit: int | None = None) -> Certificate:
    """Goodness is checked on the closure of the long diagram."""
    return _certificate(ld.closure, MINIMAL_LONG, THEOREM_LONG, [], limit)


class Site(NamedTuple):
    crossings: tuple[int, ...]
    face: tuple[int, ...]


@dataclass(frozen=True)
class MoveSites:
    r1_decreasing: list[Site]
    r2_decreasing: list[Site]
    r3_applicable: list[Site]

    def any(self) -> bool:
        return bool(self.r1_decreasing or self.r2_decreasing or self.r3_applicable)

    def to_dict(self) -> dict:
        return {k: [[list(s.crossings), list(s.face)] for s in v] for k, v in asdict(self).items()}


def detect_reducing_moves(d: Diagram) -> MoveSites:
    """Find faces of the shadow where a Reidemeister move could start.

    * R1: every monogon.
    * R2 (decreasing): a bigon on two distinct crossings whose one side is
      over at both ends (the other side is then under at both ends).
    * R3: a trigon on three distinct crossings with a side that is over at
      both ends; some other side is then under at both ends, so the top
      strand can slide across the crossing of the other two.

    Nothing is moved; only the sites are reported.
    """
    r1, r2, r3 = [], [], []
    for face in faces(d):
        edges = [(x, d.pairing[x]) for x in face]
        cs = tuple(d.crossing_of(x) for x in face)
        site = Site(tuple(sorted(cs)), tuple(face))
        if len(face) == 1:
            r1.append(site)
            continue
        if len(set(cs)) != len(face):
            continue
        status = [(d.is_over(x), d.is_over(y)) for x, y in edges]
        if len(face) == 2 and (True, True) in status:
            r2.append(site)
        elif len(face) == 3 and (True, True) in status and (False, False) in status:
            r3.append(site)
    return MoveSites(r1, r2, r3)


@dataclass(frozen=True)
class CablingReport:
    """Cell counts of the ``m``-cable against their predicted values.

    ``cell_count`` is the number of 2-cells of the atom of the base diagram
    (``n + chi``).  Predicted values use only ``n``, ``chi`` and ``m``.
    """

    m: int
    n: int
    chi: int
    applicable: bool
    cell_count: int
    vertices: int
    edges: int
    cells: int
    chi_m: int
    cable_good: bool
    predicted_vertices: int
    predicted_edges: int
    predicted_cells: int
    span_from_chi_m: int
    predicted_span: int
    measured_span: int | None

    @property
    def counts_match(self) -> bool:
        return (self.vertices, self.edges, self.cells) == (
            self.predicted_vertices,
            self.predicted_edges,
            self.predicted_cells,
        )

    @property
    def identity_holds(self) -> bool:
        return self.span_from_chi_m == self.predicted_span

    @property
    def span_matches(self) -> bool | None:
        if self.measured_span is None:
            return None
        return self.measured_span == self.predicted_span

    def to_dict(self) -> dict:
        out = asdict(self)
        out.update(counts_match=self.counts_match, identity_holds=self.identity_holds,
                   span_matches=self.span_matches)
        return out


def predicted_cable_span(m: int, n: int, chi: int) -> int:
    """Bracket span of the ``m``-cable of a good diagram with ``n`` crossings."""
    return 2 * (m * m + m) * n + 2 * m * chi - 4


def chi_gap_required(m: int, n: int, n_other: int) -> int:
    """Lower bound on ``chi_other - chi`` forced by equal cable brackets.

    If a good diagram with ``n`` crossings and a diagram with ``n_other``
    crossings have cables with the same bracket, comparing span with bound
    gives ``chi_other - chi >= (m + 1)(n - n_other)`` for every ``m``.
    """
    return (m + 1) * (n - n_other)


def cabling_consistency(d: Diagram, m: int, span_limit: int = 20) -> CablingReport:
    """Build the ``m``-cable and check its counts and span predictions.

    The span is measured by state sum only when the cable has at most
    ``span_limit`` crossings; otherwise ``measured_span`` is ``None``.
    """
    if m < 1:
        raise ValueError("cable multiplicity must be a positive integer")
    base = build_atom(d)
    cabled = cable(d, m)
    atom = build_atom(cabled)
    n, chi = d.n, base.chi
    measured = None
    if cabled.n <= span_limit:
        measured = kauffman_bracket(cabled, limit=span_limit).span()
    return CablingReport(
        m=m,
        n=n,
        chi=chi,
        applicable=goodness(base).good,
        cell_count=base.cell_count,
        vertices=atom.V,
        edges=atom.E,
        cells=atom.cell_count,
        chi_m=atom.chi,
        cable_good=goodness(atom).good,
        predicted_vertices=m * m * n,
        predicted_edges=2 * m * m * n,
        predicted_cells=m * (n + chi),
        span_from_chi_m=4 * m * m * n + 2 * (atom.chi - 2),
        predicted_span=predicted_cable_span(m, n, chi),
        measured_span=measured,
    )


@dataclass(frozen=True)
class BraidExample:
    word: BraidWord
    diagram: Diagram
    knot: bool
    good: bool


def generate_positive_braid(strands: int, exponents: list[int],
                            generators: list[int] | None = None) -> BraidExample:
    """Closure of ``s_g1^e1 s_g2^e2 ...`` with every exponent at least 2.

    Generators default to ``1, 2, ..., strands-1`` repeated cyclically.
    Whether the closure is a knot and whether it is good are reported, not
    assumed.
    """
    if any(e < 2 for e in exponents):
        raise ValueError("every exponent must be at least 2")
    if generators is None:
        generators = [1 + i % (strands - 1) for i in range(len(exponents))] if strands > 1 else []
    if len(generators) != len(exponents):
        raise ValueError("one generator per exponent")
    word = BraidWord(strands, tuple(zip(generators, exponents)))
    d = braid_closure(word)
    return BraidExample(word, d, is_knot(d), goodness(build_atom(d)).good)


def enumerate_positive_braids(max_crossings: int, max_strands: int | None = None) -> Iterator[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    """All ``(strands, generators, exponents)`` with exponents >= 2 and total
    at most ``max_crossings``, using every generator, with no two cyclically
    adjacent syllables on the same generator (those would merge).
    """
    top = max_crossings // 2 + 1 if max_strands is None else max_strands
    for strands in range(2, top + 1):
        for k in range(strands - 1, max_crossings // 2 + 1):
            for gens in itertools.product(range(1, strands), repeat=k):
                if set(gens) != set(range(1, strands)):
                    continue
                if k > 1 and any(gens[i] == gens[(i + 1) % k] for i in range(k)):
                    continue
                for exps in _compositions_at_least_two(k, max_crossings):
                    yield strands, gens, exps


def _compositions_at_least_two(k: int, total_max: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if len(prefix) == k:
            yield prefix
            return
        slots_left = k - len(prefix) - 1
        for e in range(2, remaining - 2 * slots_left + 1):
            yield from rec(prefix + (e,), remaining - e)

    yield from rec((), total_max)
