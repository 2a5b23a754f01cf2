"""Random diagrams for property tests and stress runs."""

from __future__ import annotations

import random

from knotatoms.diagram.codes import BraidWord
from knotatoms.diagram.core import Diagram, DiagramError
from knotatoms.diagram.surgery import braid_closure

__all__ = ["random_braid_word", "random_classical_diagram", "random_diagram"]


def random_diagram(n: int, rng: random.Random, max_tries: int = 1000) -> Diagram:
    """Uniform random connected rotation system with ``n`` crossings.

    The arcs are a random perfect matching of the ``4n`` darts, so most
    results are virtual.  Disconnected draws are rejected and redrawn.
    """
    if n < 1:
        raise ValueError("n must be positive")
    crossings = tuple(tuple(range(4 * i, 4 * i + 4)) for i in range(n))
    for _ in range(max_tries):
        darts = list(range(4 * n))
        rng.shuffle(darts)
        pairing = [0] * (4 * n)
        for a, b in zip(darts[::2], darts[1::2]):
            pairing[a], pairing[b] = b, a
        try:
            return Diagram(crossings, tuple(pairing))
        except DiagramError:
            continue
    raise RuntimeError(f"no connected diagram with {n} crossings after {max_tries} draws")


def random_braid_word(strands: int, length: int, rng: random.Random, positive: bool = False) -> BraidWord:
    """Random word using every generator at least once, so its closure is connected."""
    if strands < 2 or length < strands - 1:
        raise ValueError("need at least one letter per generator")
    gens = list(range(1, strands)) + [rng.randint(1, strands - 1) for _ in range(length - strands + 1)]
    rng.shuffle(gens)
    letters = [(g, 1 if positive or rng.random() < 0.5 else -1) for g in gens]
    return BraidWord(strands, tuple(letters))


def random_classical_diagram(strands: int, length: int, rng: random.Random) -> Diagram:
    return braid_closure(random_braid_word(strands, length, rng))
