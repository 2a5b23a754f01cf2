"""Abstract knot diagrams as rotation systems on darts.

A crossing is a 4-tuple of dart ids listed clockwise.  Slots 0 and 2 hold
the understrand, slots 1 and 3 the overstrand.  The pairing joins the two
darts at the ends of every arc.  Virtual crossings are never stored: any
rotation system is accepted and classicality is a derived property.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

__all__ = [
    "Diagram",
    "DiagramError",
    "component_count",
    "components",
    "crossing_signs",
    "faces",
    "is_classical",
    "is_knot",
    "shadow_euler_characteristic",
    "writhe",
]


class DiagramError(ValueError):
    """Raised when crossings and pairing do not describe a valid diagram."""


def _normalize(crossing: tuple[int, ...]) -> tuple[int, int, int, int]:
    # rotating by two slots is a symmetry of the encoding; pick slot0 < slot2
    a, b, c, d = crossing
    if a > c:
        return (c, d, a, b)
    return (a, b, c, d)


@dataclass(frozen=True)
class Diagram:
    """A connected diagram of a (possibly virtual) link.

    Darts are the integers ``0 .. 4n-1``.  ``pairing[d]`` is the dart at the
    other end of the arc leaving ``d``.  A diagram with no crossings is a
    single unknotted circle.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    pairing: tuple[int, ...]
    labels: Mapping[str, str] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        crossings = tuple(_normalize(tuple(c)) for c in self.crossings)
        pairing = tuple(self.pairing)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "pairing", pairing)

        ndarts = 4 * len(crossings)
        for i, c in enumerate(crossings):
            if len(set(c)) != 4:
                raise DiagramError(f"crossing {i} does not have 4 distinct darts")
        seen = sorted(d for c in crossings for d in c)
        if seen != list(range(ndarts)):
            raise DiagramError("darts must be exactly 0..4n-1, each in one slot")
        if len(pairing) != ndarts:
            raise DiagramError(f"pairing has length {len(pairing)}, expected {ndarts}")
        for d, e in enumerate(pairing):
            if not 0 <= e < ndarts or e == d or pairing[e] != d:
                raise DiagramError(f"pairing is not a fixed-point-free involution at dart {d}")
        if ndarts and not self._connected():
            raise DiagramError("split diagram: the shadow is disconnected")

    def _connected(self) -> bool:
        where = self._where
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for d in self.crossings[c]:
                o = where[self.pairing[d]][0]
                if o not in seen:
                    seen.add(o)
                    stack.append(o)
        return len(seen) == len(self.crossings)

    @property
    def n(self) -> int:
        """Number of classical crossings."""
        return len(self.crossings)

    @property
    def ndarts(self) -> int:
        return 4 * len(self.crossings)

    @cached_property
    def _where(self) -> tuple[tuple[int, int], ...]:
        where = [(0, 0)] * self.ndarts
        for i, c in enumerate(self.crossings):
            for s, d in enumerate(c):
                where[d] = (i, s)
        return tuple(where)

    def crossing_of(self, dart: int) -> int:
        return self._where[dart][0]

    def slot_of(self, dart: int) -> int:
        return self._where[dart][1]

    def is_over(self, dart: int) -> bool:
        return self._where[dart][1] % 2 == 1

    def rotate(self, dart: int, steps: int = 1) -> int:
        """Dart reached by turning ``steps`` slots clockwise at the same crossing."""
        c, s = self._where[dart]
        return self.crossings[c][(s + steps) % 4]

    def opposite(self, dart: int) -> int:
        """Dart where the strand entering at ``dart`` leaves the crossing."""
        return self.rotate(dart, 2)

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs as dart pairs ``(d, e)`` with ``d < e``, sorted."""
        return [(d, e) for d, e in enumerate(self.pairing) if d < e]

    def with_labels(self, **labels: str) -> Diagram:
        merged = dict(self.labels)
        merged.update(labels)
        return Diagram(self.crossings, self.pairing, merged)

    def relabeled(self) -> Diagram:
        """Same diagram with dart ``4*i + s`` sitting in slot ``s`` of crossing ``i``."""
        new = {d: 4 * i + s for i, c in enumerate(self.crossings) for s, d in enumerate(c)}
        pairing = [0] * self.ndarts
        for d, e in enumerate(self.pairing):
            pairing[new[d]] = new[e]
        crossings = tuple(tuple(range(4 * i, 4 * i + 4)) for i in range(self.n))
        return Diagram(crossings, tuple(pairing), dict(self.labels))


def components(d: Diagram) -> list[list[int]]:
    """Oriented components as lists of entry darts.

    Each component is traversed starting at its lowest dart, which is taken
    as an entry dart; the strand goes straight through every crossing.
    Components are ordered by their lowest dart.
    """
    if d.n == 0:
        return [[]]
    visited = [False] * d.ndarts
    result = []
    for start in range(d.ndarts):
        if visited[start]:
            continue
        comp = []
        x = start
        while not visited[x]:
            out = d.opposite(x)
            visited[x] = visited[out] = True
            comp.append(x)
            x = d.pairing[out]
        result.append(comp)
    return result


def component_count(d: Diagram) -> int:
    return len(components(d))


def is_knot(d: Diagram) -> bool:
    return component_count(d) == 1


def crossing_signs(d: Diagram) -> list[int]:
    """Sign of each crossing under the orientation chosen by :func:`components`.

    With the understrand entering at slot ``t``, the crossing is positive
    when the overstrand enters at slot ``t + 1``.
    """
    entry_slot: dict[tuple[int, int], int] = {}
    for comp in components(d):
        for x in comp:
            c, s = d._where[x]
            entry_slot[(c, s % 2)] = s
    signs = []
    for c in range(d.n):
        under, over = entry_slot[(c, 0)], entry_slot[(c, 1)]
        signs.append(1 if over == (under + 1) % 4 else -1)
    return signs


def writhe(d: Diagram) -> int:
    return sum(crossing_signs(d))


def faces(d: Diagram) -> list[list[int]]:
    """Faces of the rotation system, each as the cycle of darts it leaves from.

    A face is traced by crossing an arc and turning one slot clockwise.
    These are the faces of the shadow on its Carter surface, not the cells
    of the atom.
    """
    visited = [False] * d.ndarts
    result = []
    for start in range(d.ndarts):
        if visited[start]:
            continue
        cycle = []
        x = start
        while not visited[x]:
            visited[x] = True
            cycle.append(x)
            x = d.rotate(d.pairing[x])
        result.append(cycle)
    return result


def shadow_euler_characteristic(d: Diagram) -> int:
    if d.n == 0:
        return 2
    return d.n - 2 * d.n + len(faces(d))


def is_classical(d: Diagram) -> bool:
    """True iff the rotation system embeds in the sphere."""
    return shadow_euler_characteristic(d) == 2
