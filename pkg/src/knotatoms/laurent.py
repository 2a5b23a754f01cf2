"""Exact Laurent polynomials in one variable ``a`` with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping

__all__ = ["LaurentPoly", "add", "invert_variable", "mul", "span"]


class LaurentPoly:
    """Immutable mapping exponent -> nonzero integer coefficient."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPoly:
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def max_degree(self) -> int:
        if not self._terms:
            raise ValueError("empty polynomial")
        return max(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise ValueError("empty polynomial")
        return min(self._terms)

    def span(self) -> int:
        return self.max_degree() - self.min_degree()

    def invert_variable(self) -> LaurentPoly:
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        return LaurentPoly(list(self._terms.items()) + list(other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-_coerce(other))

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        other = _coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials")
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def evaluate(self, value: complex) -> complex:
        return sum(c * value**e for e, c in self._terms.items())

    def __str__(self) -> str:
        """``coeff*a^exp`` terms by increasing exponent joined by ``+``."""
        if not self._terms:
            return "0"
        return "+".join(str(c) if e == 0 else f"{c}*a^{e}" for e, c in self._terms.items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        text = text.strip()
        if text == "0":
            return cls()
        terms = []
        for part in re.split(r"\+(?=-?\d)", text):
            m = re.fullmatch(r"(-?\d+)(?:\*a\^(-?\d+))?", part)
            if m is None:
                raise ValueError(f"bad term {part!r}")
            terms.append((int(m.group(2) or 0), int(m.group(1))))
        return cls(terms)


def _coerce(x: LaurentPoly | int) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly({0: x})


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def invert_variable(p: LaurentPoly) -> LaurentPoly:
    return p.invert_variable()


def span(p: LaurentPoly) -> int:
    return p.span()
