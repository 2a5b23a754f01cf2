"""The atom of a diagram: checkerboard cells, Euler characteristic, goodness.

At a crossing with clockwise slots 0..3 (understrand on 0 and 2) the black
corners are (0, 1) and (2, 3), the white corners (1, 2) and (3, 0).  A cell
of either colour is an orbit of the group generated by the arc pairing and
the corner involution of that colour; its boundary walk alternates between
running along an arc and turning through a corner.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from knotatoms.diagram import Diagram

__all__ = [
    "Atom",
    "GoodnessReport",
    "Witness",
    "atom_summary",
    "build_atom",
    "euler_characteristic",
    "genus_info",
    "is_good",
]

BLACK = "black"
WHITE = "white"


def _black_partner(slot: int) -> int:
    return slot ^ 1


def _white_partner(slot: int) -> int:
    return 3 - slot


def _corner_map(d: Diagram, colour: str) -> list[int]:
    partner = _black_partner if colour == BLACK else _white_partner
    result = [0] * d.ndarts
    for c in d.crossings:
        for s, x in enumerate(c):
            result[x] = c[partner(s)]
    return result


def _trace_cells(d: Diagram, colour: str) -> tuple[tuple[tuple[int, ...], ...], list[int], list[int]]:
    """Boundary walks of all cells of one colour.

    Returns the walks (each starting at its minimal dart), the cell index of
    every dart and the parity of its position in the walk.  Darts at even
    positions leave along an arc, odd ones arrive.
    """
    corner = _corner_map(d, colour)
    cell_of = [-1] * d.ndarts
    side = [0] * d.ndarts
    walks = []
    for start in range(d.ndarts):
        if cell_of[start] >= 0:
            continue
        walk = []
        x = start
        while True:
            walk.append(x)
            y = d.pairing[x]
            walk.append(y)
            x = corner[y]
            if x == start:
                break
        for pos, y in enumerate(walk):
            cell_of[y] = len(walks)
            side[y] = pos % 2
        walks.append(tuple(walk))
    return tuple(walks), cell_of, side


def _orientable(d: Diagram, black, white) -> bool:
    """Orient the black and white polygons so that every arc is run in
    opposite directions by its two sides; fail means non-orientable."""
    b_walks, b_cell, b_side = black
    w_walks, w_cell, w_side = white
    nb = len(b_walks)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(nb + len(w_walks))]
    for x, y in d.arcs():
        u, v = b_cell[x], nb + w_cell[x]
        parity = b_side[x] ^ w_side[x] ^ 1
        adj[u].append((v, parity))
        adj[v].append((u, parity))
    orient = [-1] * len(adj)
    for root in range(len(adj)):
        if orient[root] >= 0:
            continue
        orient[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, parity in adj[u]:
                want = orient[u] ^ parity
                if orient[v] < 0:
                    orient[v] = want
                    queue.append(v)
                elif orient[v] != want:
                    return False
    return True


@dataclass(frozen=True)
class Atom:
    """Atom of a diagram with its traced cells.

    ``black_cells`` and ``white_cells`` hold boundary walks; a cell is named
    by its position in these tuples, which follows the minimal dart.
    ``cell_count`` is the total number of 2-cells.
    """

    source: Diagram
    black_cells: tuple[tuple[int, ...], ...]
    white_cells: tuple[tuple[int, ...], ...]
    black_cell_of: tuple[int, ...]
    white_cell_of: tuple[int, ...]
    orientable: bool

    @property
    def V(self) -> int:
        return self.source.n

    @property
    def E(self) -> int:
        return 2 * self.source.n

    @property
    def F_black(self) -> int:
        return len(self.black_cells) if self.source.n else 1

    @property
    def F_white(self) -> int:
        return len(self.white_cells) if self.source.n else 1

    @property
    def cell_count(self) -> int:
        return self.F_black + self.F_white

    F = cell_count

    @property
    def chi(self) -> int:
        return self.V - self.E + self.cell_count

    @property
    def genus(self) -> int | None:
        """Orientable genus, or ``None`` for a non-orientable atom."""
        return (2 - self.chi) // 2 if self.orientable else None

    @property
    def crosscaps(self) -> int | None:
        return None if self.orientable else 2 - self.chi

    def cell_id(self, colour: str, index: int) -> int:
        """Minimal dart of a cell, used as its public identifier."""
        cells = self.black_cells if colour == BLACK else self.white_cells
        return min(cells[index])


def build_atom(d: Diagram) -> Atom:
    if d.n == 0:
        return Atom(d, (), (), (), (), True)
    black = _trace_cells(d, BLACK)
    white = _trace_cells(d, WHITE)
    return Atom(
        source=d,
        black_cells=black[0],
        white_cells=white[0],
        black_cell_of=tuple(black[1]),
        white_cell_of=tuple(white[1]),
        orientable=_orientable(d, black, white),
    )


def euler_characteristic(a: Atom) -> int:
    return a.chi


def genus_info(a: Atom) -> tuple[bool, int]:
    """``(True, genus)`` for orientable atoms, ``(False, crosscap number)`` otherwise."""
    if a.orientable:
        return True, a.genus
    return False, a.crosscaps


class Witness(NamedTuple):
    crossing: int
    colour: str
    cell: int


@dataclass(frozen=True)
class GoodnessReport:
    good: bool
    witnesses: tuple[Witness, ...]


def goodness(a: Atom) -> GoodnessReport:
    """A crossing fails when its two corners of one colour lie in the same cell."""
    d = a.source
    witnesses = []
    for i, c in enumerate(d.crossings):
        if a.black_cell_of[c[0]] == a.black_cell_of[c[2]]:
            witnesses.append(Witness(i, BLACK, a.cell_id(BLACK, a.black_cell_of[c[0]])))
        if a.white_cell_of[c[1]] == a.white_cell_of[c[3]]:
            witnesses.append(Witness(i, WHITE, a.cell_id(WHITE, a.white_cell_of[c[1]])))
    return GoodnessReport(not witnesses, tuple(witnesses))


def is_good(d: Diagram) -> GoodnessReport:
    """Every crossing meets four distinct cells of the atom."""
    return goodness(build_atom(d))


def atom_summary(a: Atom) -> dict:
    report = goodness(a)
    return {
        "V": a.V,
        "E": a.E,
        "F_black": a.F_black,
        "F_white": a.F_white,
        "chi": a.chi,
        "orientable": a.orientable,
        "genus": a.genus,
        "good": report.good,
        "witnesses": [list(w) for w in report.witnesses],
    }
