"""Degree-based topological indices as edge-function sums.

Every index here has the shape sum over edges uv of f(d_u, d_v). The
augmented Zagreb index uses exact rational arithmetic end to end (its terms
are rational, and exactness is what makes closed-form adjudication
unambiguous); the Randic and atom-bond connectivity indices sum irrational
terms and use floats. Float sums run over a fixed order (sorted edges,
sorted partition classes) via math.fsum, so results are deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .graph import DegreePair, EdgePartition, Graph

__all__ = [
    "ABC",
    "AZI",
    "EDGE_FUNCTIONS",
    "EdgeFunction",
    "IndexValue",
    "RANDIC",
    "UndefinedTermError",
    "abc",
    "abc_term",
    "azi",
    "azi_term",
    "index_from_partition",
    "randic",
    "randic_term",
]


class UndefinedTermError(ValueError):
    """An edge function was evaluated where its denominator vanishes."""


def _check_degrees(d_u: int, d_v: int) -> None:
    if d_u < 1 or d_v < 1:
        raise ValueError(f"edge endpoint degrees must be >= 1 (got ({d_u}, {d_v}))")


def azi_term(d_u: int, d_v: int) -> Fraction:
    """Exact augmented Zagreb term (d_u*d_v / (d_u+d_v-2))**3.

    Undefined when both endpoints have degree 1 (zero denominator).
    """
    _check_degrees(d_u, d_v)
    if d_u + d_v == 2:
        raise UndefinedTermError(
            "augmented Zagreb term is undefined for degree pair (1, 1)"
        )
    return Fraction(d_u * d_v, d_u + d_v - 2) ** 3


def randic_term(d_u: int, d_v: int) -> float:
    """Randic term 1/sqrt(d_u*d_v)."""
    _check_degrees(d_u, d_v)
    return 1.0 / math.sqrt(d_u * d_v)


def abc_term(d_u: int, d_v: int) -> float:
    """Atom-bond connectivity term sqrt((d_u+d_v-2) / (d_u*d_v)); 0 at (1, 1)."""
    _check_degrees(d_u, d_v)
    return math.sqrt((d_u + d_v - 2) / (d_u * d_v))


@dataclass(frozen=True)
class IndexValue:
    """An index result: float always, exact rational when the index has one."""

    exact: Fraction | None
    approx: float

    @classmethod
    def from_exact(cls, value: Fraction) -> "IndexValue":
        return cls(exact=value, approx=float(value))

    @classmethod
    def from_float(cls, value: float) -> "IndexValue":
        return cls(exact=None, approx=value)


@dataclass(frozen=True)
class EdgeFunction:
    """A symmetric per-edge term f(d_u, d_v) plus how to accumulate it."""

    name: str
    term: Callable[[int, int], Fraction | float]
    exact: bool

    def __call__(self, d_u: int, d_v: int) -> Fraction | float:
        return self.term(d_u, d_v)


AZI = EdgeFunction("azi", azi_term, exact=True)
RANDIC = EdgeFunction("randic", randic_term, exact=False)
ABC = EdgeFunction("abc", abc_term, exact=False)

EDGE_FUNCTIONS: dict[str, EdgeFunction] = {f.name: f for f in (AZI, RANDIC, ABC)}


def azi(g: Graph) -> IndexValue:
    """Exact augmented Zagreb index of g, summed edge by edge."""
    degrees = g.degrees
    cache: dict[DegreePair, Fraction] = {}
    total = Fraction(0)
    for u, v in g.edges:
        pair = (degrees[u], degrees[v])
        term = cache.get(pair)
        if term is None:
            try:
                term = azi_term(*pair)
            except UndefinedTermError:
                raise UndefinedTermError(
                    f"augmented Zagreb term is undefined on edge ({u}, {v}): "
                    "both endpoints have degree 1"
                ) from None
            cache[pair] = term
        total += term
    return IndexValue.from_exact(total)


def randic(g: Graph) -> IndexValue:
    """Randic index of g, summed edge by edge in fixed order."""
    degrees = g.degrees
    return IndexValue.from_float(
        math.fsum(1.0 / math.sqrt(degrees[u] * degrees[v]) for u, v in g.edges)
    )


def abc(g: Graph) -> IndexValue:
    """Atom-bond connectivity index of g, summed edge by edge in fixed order."""
    degrees = g.degrees
    return IndexValue.from_float(
        math.fsum(
            math.sqrt((degrees[u] + degrees[v] - 2) / (degrees[u] * degrees[v]))
            for u, v in g.edges
        )
    )


def index_from_partition(partition: EdgePartition, f: EdgeFunction) -> IndexValue:
    """Sum count * f(d_min, d_max) over the partition's degree classes.

    Equals the edgewise sum whenever the partition came from the same graph:
    exactly for exact edge functions, to float reduction order otherwise.
    """
    if f.exact:
        total = Fraction(0)
        for pair, count in partition.classes.items():
            try:
                term = f.term(*pair)
            except UndefinedTermError:
                raise UndefinedTermError(
                    f"{f.name} term is undefined for degree class {pair}"
                ) from None
            total += count * term
        return IndexValue.from_exact(total)
    return IndexValue.from_float(
        math.fsum(count * f.term(*pair) for pair, count in partition.classes.items())
    )
