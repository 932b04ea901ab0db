"""Shared fixtures and independent reference implementations.

The reference functions here enumerate subsets directly from the edge
list with itertools, on purpose: they must not share code with the
library paths they are used to check.
"""

from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from densekit import WeightedGraph


@st.composite
def graphs(draw, max_n: int = 7, weighted: bool = True):
    """Random small graphs; weights are modest exact rationals."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = (
        draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
        if pairs
        else []
    )
    if weighted:
        weights = draw(
            st.lists(
                st.fractions(min_value=Fraction(1, 10), max_value=10, max_denominator=20),
                min_size=len(chosen),
                max_size=len(chosen),
            )
        )
    else:
        weights = [1] * len(chosen)
    return WeightedGraph(n, [(u, v, w) for (u, v), w in zip(chosen, weights)])


def ref_induced_weight(g: WeightedGraph, s) -> Fraction:
    s = set(s)
    total = Fraction(0)
    for u, v, w in g.iter_edges():
        if u in s and v in s:
            total += Fraction(w)
    return total


def ref_density(g: WeightedGraph, s) -> Fraction:
    s = set(s)
    return ref_induced_weight(g, s) / len(s)


def ref_best_density(g: WeightedGraph, sizes) -> Fraction:
    """Max density over nonempty subsets whose size is in ``sizes``."""
    best = None
    for sz in sizes:
        for s in combinations(range(g.n), sz):
            d = ref_density(g, s)
            if best is None or d > best:
                best = d
    assert best is not None
    return best


def ref_dmax(g):
    return ref_best_density(g, range(1, g.n + 1))


def ref_dal(g, k):
    return ref_best_density(g, range(k, g.n + 1))


def ref_dam(g, k):
    return ref_best_density(g, range(1, k + 1))


def ref_dk(g, k):
    return ref_best_density(g, [k])


def ref_excess_max(g: WeightedGraph, alpha) -> Fraction:
    """Max of W(H) - alpha*|H| over all subsets, the empty one included."""
    best = Fraction(0)
    for sz in range(1, g.n + 1):
        for s in combinations(range(g.n), sz):
            val = ref_induced_weight(g, s) - Fraction(alpha) * sz
            if val > best:
                best = val
    return best


@pytest.fixture
def p3():
    return WeightedGraph(3, [(0, 1), (1, 2)])


@pytest.fixture
def k3():
    return WeightedGraph(3, [(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k4():
    return WeightedGraph(4, list(combinations(range(4), 2)))


@pytest.fixture
def star4():
    """Star with center 0 and leaves 1..3, unit weights."""
    return WeightedGraph(4, [(0, 1), (0, 2), (0, 3)])


@pytest.fixture
def tri_pendant():
    """Triangle 0-1-2 plus pendant 3 attached to 0."""
    return WeightedGraph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


@pytest.fixture
def k4_pendant():
    """K4 on 0..3 plus pendant 4 attached to 0; W=7, n=5."""
    edges = list(combinations(range(4), 2)) + [(0, 4)]
    return WeightedGraph(5, edges)
