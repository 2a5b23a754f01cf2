"""Diagram surgery: mirror, connected sum, blackboard cabling, braid closure."""

from __future__ import annotations

from knotatoms.diagram.codes import BraidWord
from knotatoms.diagram.core import Diagram, DiagramError, components

__all__ = ["braid_closure", "cable", "canonical_code", "circle", "connected_sum", "mirror"]


def circle() -> Diagram:
    """The crossingless diagram of the unknot."""
    return Diagram((), ())


def mirror(d: Diagram) -> Diagram:
    """Switch every crossing, keeping the shadow and its rotation.

    Implemented as a one-slot rotation of every crossing; together with the
    slot normalization of :class:`Diagram` this is an exact involution.
    """
    crossings = tuple((c[1], c[2], c[3], c[0]) for c in d.crossings)
    return Diagram(crossings, d.pairing, dict(d.labels))


def _oriented_arc(d: Diagram, dart: int) -> tuple[int, int]:
    """``(exit, entry)`` darts of the arc containing ``dart``."""
    if not 0 <= dart < d.ndarts:
        raise DiagramError(f"dart {dart} is not in a diagram with {d.ndarts} darts")
    entries = {x for comp in components(d) for x in comp}
    other = d.pairing[dart]
    if dart in entries:
        return other, dart
    return dart, other


def connected_sum(d1: Diagram, arc1: int | None, d2: Diagram, arc2: int | None) -> Diagram:
    """Cut the arc of ``d1`` through dart ``arc1`` and the arc of ``d2``
    through ``arc2`` and splice the ends so that orientations agree.

    The chosen arcs are recorded in the ``provenance`` label.  A crossingless
    summand contributes nothing and its arc must be ``None``.
    """
    note = f"connected_sum(arc1={arc1}, arc2={arc2})"
    if d1.n == 0 or d2.n == 0:
        for d, arc in ((d1, arc1), (d2, arc2)):
            if d.n == 0 and arc is not None:
                raise DiagramError("a crossingless diagram has no darts to cut at")
        other, arc = (d2, arc2) if d1.n == 0 else (d1, arc1)
        if other.n and arc is not None:
            _oriented_arc(other, arc)
        return Diagram(other.crossings, other.pairing, {"provenance": note})
    if arc1 is None or arc2 is None:
        raise DiagramError("connected_sum needs an arc of each summand")

    a_out, a_in = _oriented_arc(d1, arc1)
    b_out, b_in = _oriented_arc(d2, arc2)
    shift = d1.ndarts
    b_out, b_in = b_out + shift, b_in + shift

    crossings = d1.crossings + tuple(tuple(x + shift for x in c) for c in d2.crossings)
    pairing = list(d1.pairing) + [e + shift for e in d2.pairing]
    pairing[a_out], pairing[b_in] = b_in, a_out
    pairing[b_out], pairing[a_in] = a_in, b_out
    return Diagram(crossings, tuple(pairing), {"provenance": note})


def cable(d: Diagram, k: int) -> Diagram:
    """Blackboard-framed ``k``-parallel cable.

    Every crossing becomes a ``k`` by ``k`` grid.  In the grid the
    understrands run south to north (slots 0 to 2) and the overstrands west
    to east (slots 1 to 3), so every new crossing keeps the orientation and
    over/under roles of its parent.  Parallel copies are indexed clockwise
    around each crossing, which reverses the index along every arc.
    """
    if k < 1:
        raise ValueError("cable multiplicity must be a positive integer")
    if d.n == 0:
        raise DiagramError("the cable of a crossingless circle is split")
    kk = k * k

    def dart(c: int, x: int, y: int, slot: int) -> int:
        return 4 * (c * kk + x * k + y) + slot

    def boundary(c: int, s: int, t: int) -> int:
        if s == 0:
            return dart(c, k - 1 - t, 0, 0)
        if s == 1:
            return dart(c, 0, t, 1)
        if s == 2:
            return dart(c, t, k - 1, 2)
        return dart(c, k - 1, k - 1 - t, 3)

    total = d.n * kk
    pairing = [-1] * (4 * total)

    def join(a: int, b: int) -> None:
        pairing[a], pairing[b] = b, a

    for c in range(d.n):
        for x in range(k):
            for y in range(k):
                if y + 1 < k:
                    join(dart(c, x, y, 2), dart(c, x, y + 1, 0))
                if x + 1 < k:
                    join(dart(c, x, y, 3), dart(c, x + 1, y, 1))
    for a, b in d.arcs():
        ca, sa = d.crossing_of(a), d.slot_of(a)
        cb, sb = d.crossing_of(b), d.slot_of(b)
        for t in range(k):
            join(boundary(ca, sa, t), boundary(cb, sb, k - 1 - t))

    crossings = tuple(tuple(range(4 * i, 4 * i + 4)) for i in range(total))
    return Diagram(crossings, tuple(pairing), {"provenance": f"cable(k={k})"})


def braid_closure(w: BraidWord) -> Diagram:
    """Closure of a braid drawn top to bottom with strands pointing down.

    ``s_i`` crosses positions ``i`` and ``i+1``; for a positive exponent the
    strand coming from the right passes over, giving a positive crossing.
    """
    singles = [(i - 1, 1 if j > 0 else -1) for i, j in w.letters for _ in range(abs(j))]
    if not singles:
        if w.strand_count == 1:
            return circle()
        raise DiagramError("split diagram: trivial braid on several strands")

    pending: list[int | None] = [None] * w.strand_count
    first_in: list[int | None] = [None] * w.strand_count
    pairing = [-1] * (4 * len(singles))

    def attach(pos: int, incoming: int) -> None:
        if pending[pos] is None:
            first_in[pos] = incoming
        else:
            pairing[pending[pos]], pairing[incoming] = incoming, pending[pos]

    crossings = []
    for m, (p, sign) in enumerate(singles):
        base = 4 * m
        if sign > 0:
            tl, tr, br, bl = base, base + 1, base + 2, base + 3
        else:
            tr, br, bl, tl = base, base + 1, base + 2, base + 3
        crossings.append((base, base + 1, base + 2, base + 3))
        attach(p, tl)
        attach(p + 1, tr)
        pending[p], pending[p + 1] = bl, br

    for pos in range(w.strand_count):
        if pending[pos] is None:
            raise DiagramError(f"split diagram: strand {pos + 1} meets no crossing")
        a, b = pending[pos], first_in[pos]
        pairing[a], pairing[b] = b, a
    return Diagram(tuple(crossings), tuple(pairing), {"braid": str(w)})


def canonical_code(d: Diagram) -> tuple[int, ...]:
    """Relabelling-invariant code: equal codes iff the diagrams are isomorphic.

    Isomorphisms are dart bijections preserving pairing, clockwise rotation
    and over/under roles.
    """
    if d.n == 0:
        return ()
    best = None
    for start in range(d.ndarts):
        if d.slot_of(start) % 2:
            continue
        rot = {d.crossing_of(start): d.slot_of(start)}
        order = [d.crossing_of(start)]
        new_index = {order[0]: 0}
        i = 0
        while i < len(order):
            c = order[i]
            for s in range(4):
                x = d.crossings[c][(s + rot[c]) % 4]
                y = d.pairing[x]
                cy = d.crossing_of(y)
                if cy not in new_index:
                    new_index[cy] = len(order)
                    order.append(cy)
                    rot[cy] = 0 if d.slot_of(y) in (0, 1) else 2
            i += 1
        code = []
        for c in order:
            for s in range(4):
                y = d.pairing[d.crossings[c][(s + rot[c]) % 4]]
                cy = d.crossing_of(y)
                code.append(4 * new_index[cy] + (d.slot_of(y) - rot[cy]) % 4)
        code_t = tuple(code)
        if best is None or code_t < best:
            best = code_t
    return best
