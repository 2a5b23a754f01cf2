"""Atoms of knot diagrams and crossing-number minimality certificates."""

__version__ = "0.1.0"
