"""Diagram representation, text codes and surgery."""

from knotatoms.diagram.codes import (
    BraidWord,
    LongDiagram,
    ParseError,
    parse_braid,
    parse_gauss,
    parse_long_gauss,
    parse_pd,
    serialize_pd,
)
from knotatoms.diagram.core import (
    Diagram,
    DiagramError,
    component_count,
    components,
    crossing_signs,
    faces,
    is_classical,
    is_knot,
    shadow_euler_characteristic,
    writhe,
)
from knotatoms.diagram.generate import random_braid_word, random_classical_diagram, random_diagram
from knotatoms.diagram.surgery import braid_closure, cable, canonical_code, circle, connected_sum, mirror

__all__ = [
    "BraidWord",
    "Diagram",
    "DiagramError",
    "LongDiagram",
    "ParseError",
    "braid_closure",
    "cable",
    "canonical_code",
    "circle",
    "component_count",
    "components",
    "connected_sum",
    "crossing_signs",
    "faces",
    "is_classical",
    "is_knot",
    "mirror",
    "parse_braid",
    "parse_gauss",
    "parse_long_gauss",
    "parse_pd",
    "random_braid_word",
    "random_classical_diagram",
    "random_diagram",
    "serialize_pd",
    "shadow_euler_characteristic",
    "writhe",
]
