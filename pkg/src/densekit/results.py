"""Common result record returned by every solver."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Weight, WeightedGraph, induced_weight


@dataclass(frozen=True)
class SubgraphResult:
    """A vertex set with its exact density and the guarantee it carries.

    ``guarantee`` is the declared worst-case approximation ratio as a
    string ("2", "3", "8", ...), or "exact", or "heuristic".
    """

    vertices: frozenset[int]
    size: int
    weight: Weight
    density: Fraction
    method: str
    guarantee: str


def make_result(g: WeightedGraph, vertices: Iterable[int], method: str, guarantee: str) -> SubgraphResult:
    """Build a SubgraphResult, recomputing weight and density from g."""
    vertices = frozenset(vertices)
    w = induced_weight(g, vertices)
    return SubgraphResult(
        vertices=vertices,
        size=len(vertices),
        weight=w,
        density=Fraction(w, len(vertices)),
        method=method,
        guarantee=guarantee,
    )
