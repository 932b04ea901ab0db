from fractions import Fraction
from itertools import chain, combinations

import pytest
from hypothesis import given, settings

from densekit import (
    ParameterError,
    WeightedGraph,
    chalk,
    charikar_densest,
    induced_weight,
    peel,
    w_core,
)
from densekit.peeling import _peel_weighted

from .conftest import graphs, ref_dal, ref_density, ref_dmax


class TestPeelTrace:
    def test_star(self, star4):
        t = peel(star4)
        # Leaves 1 and 2 go first; then center 0 ties leaf 3 at degree 1
        # and the lower id wins.
        assert t.order == [1, 2, 0, 3]
        assert t.removal_degrees == [1, 1, 1, 0]
        assert [t.suffix_density(i) for i in (4, 3, 2, 1)] == [
            Fraction(3, 4),
            Fraction(2, 3),
            Fraction(1, 2),
            Fraction(0),
        ]

    def test_k3_degree_conservation(self, k3):
        t = peel(k3)
        assert sorted(t.removal_degrees, reverse=True) == [2, 1, 0]
        assert sum(t.removal_degrees) == k3.total_weight == 3

    def test_empty_graph(self):
        t = peel(WeightedGraph(0, []))
        assert t.order == [] and t.removal_degrees == []
        assert t.suffix_weights == [0]

    def test_min_degree_at_each_step(self, k4_pendant):
        g = k4_pendant
        t = peel(g)
        remaining = set(range(g.n))
        for v, r in zip(t.order, t.removal_degrees):
            degs = {
                x: sum(w for u, w in g.neighbors(x) if u in remaining)
                for x in remaining
            }
            assert r == degs[v] == min(degs.values())
            assert v == min(x for x in remaining if degs[x] == r)
            remaining.remove(v)

    def test_determinism(self, k4_pendant):
        t1, t2 = peel(k4_pendant), peel(k4_pendant)
        assert t1.order == t2.order
        assert t1.removal_degrees == t2.removal_degrees
        assert t1.suffix_weights == t2.suffix_weights


@settings(max_examples=80, deadline=None)
@given(g=graphs())
def test_trace_suffixes_consistent(g):
    t = peel(g)
    assert sorted(t.order) == list(range(g.n))
    assert sum(t.removal_degrees) == g.total_weight
    for i in range(1, g.n + 1):
        s = t.suffix(i)
        assert induced_weight(g, s) == t.suffix_weight(i)
        assert t.suffix_density(i) == ref_density(g, s)


@settings(max_examples=60, deadline=None)
@given(g=graphs(weighted=False))
def test_uniform_and_heap_kernels_agree(g):
    t = peel(g)
    order, rdeg = _peel_weighted(g)
    assert order == t.order
    assert rdeg == t.removal_degrees


@settings(max_examples=80, deadline=None)
@given(g=graphs())
def test_weighted_peel_removes_min_degree_vertex(g):
    t = peel(g)
    remaining = set(range(g.n))
    for v, r in zip(t.order, t.removal_degrees):
        degs = {
            x: sum(w for u, w in g.neighbors(x) if u in remaining)
            for x in remaining
        }
        assert r == degs[v] == min(degs.values())
        assert v == min(x for x in remaining if degs[x] == r)
        remaining.remove(v)


def _ref_core(g: WeightedGraph, w) -> frozenset:
    """Iteratively drop vertices with weighted degree < w until stable."""
    alive = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in sorted(alive):
            d = sum(wt for u, wt in g.neighbors(v) if u in alive)
            if d < w:
                alive.remove(v)
                changed = True
    return frozenset(alive)


class TestWCore:
    def test_k4_threshold_3(self, k4):
        assert w_core(k4, 3).core == frozenset(range(4))

    def test_k4_threshold_above_degrees(self, k4):
        res = w_core(k4, Fraction(7, 2))
        assert res.core == frozenset() and res.index == 0

    def test_triangle_pendant(self, tri_pendant):
        res = w_core(tri_pendant, 2)
        assert res.core == frozenset({0, 1, 2})
        assert res.index == 3
        # Independent check: no larger induced subgraph has min degree >= 2.
        for size in range(4, tri_pendant.n + 1):
            for s in combinations(range(tri_pendant.n), size):
                degs = [
                    sum(w for u, w in tri_pendant.neighbors(v) if u in s)
                    for v in s
                ]
                assert min(degs) < 2

    def test_reuses_trace(self, k4):
        t = peel(k4)
        assert w_core(k4, 2, trace=t).core == frozenset(range(4))


@settings(max_examples=60, deadline=None)
@given(g=graphs())
def test_core_matches_fixpoint_definition(g):
    t = peel(g)
    thresholds = {0, 1} | set(t.removal_degrees) | {r + Fraction(1, 7) for r in t.removal_degrees}
    for w in thresholds:
        assert w_core(g, w, trace=t).core == _ref_core(g, w)


@settings(max_examples=60, deadline=None)
@given(g=graphs())
def test_core_nesting(g):
    t = peel(g)
    lo = w_core(g, 1, trace=t).core
    hi = w_core(g, 2, trace=t).core
    assert hi <= lo <= w_core(g, 0, trace=t).core


@settings(max_examples=80, deadline=None)
@given(g=graphs())
def test_core_weight_lower_bound(g):
    """Core at threshold a*d keeps more than (1-a) of the weight (a > 0).

    At a = 0 the core is the whole graph and equality holds instead.
    """
    if g.n == 0:
        return
    t = peel(g)
    d = Fraction(g.total_weight, g.n)
    assert w_core(g, d, trace=t).core  # nonempty at the graph's own density
    assert induced_weight(g, w_core(g, 0, trace=t).core) == g.total_weight
    if g.total_weight == 0:
        return
    for a in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1)):
        core = w_core(g, a * d, trace=t).core
        assert induced_weight(g, core) > (1 - a) * g.total_weight


def _all_graphs_up_to(n_max):
    for n in range(1, n_max + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            yield WeightedGraph(n, [pairs[j] for j in range(len(pairs)) if mask >> j & 1])


class TestChalk:
    def test_triangle_pendant_k4(self, tri_pendant):
        res = chalk(tri_pendant, 4)
        assert res.vertices == frozenset(range(4))
        assert res.density == 1

    def test_triangle_pendant_k3(self, tri_pendant):
        # The triangle and the whole graph tie at density 1; ties go to
        # the larger suffix.
        res = chalk(tri_pendant, 3)
        assert res.density == 1
        assert res.vertices == frozenset(range(4))
        assert res.density == ref_dal(tri_pendant, 3)

    def test_p3_k3(self, p3):
        res = chalk(p3, 3)
        assert res.vertices == frozenset(range(3))
        assert res.density == Fraction(2, 3)

    def test_k_out_of_range(self, p3):
        with pytest.raises(ParameterError):
            chalk(p3, 0)
        with pytest.raises(ParameterError):
            chalk(p3, 4)

    def test_result_has_at_least_k_vertices(self, k4_pendant):
        for k in range(1, 6):
            assert chalk(k4_pendant, k).size >= k

    def test_three_approx_exhaustive_small(self):
        for g in _all_graphs_up_to(4):
            for k in range(1, g.n + 1):
                res = chalk(g, k)
                assert res.size >= k
                assert res.density >= ref_dal(g, k) / 3


class TestCharikar:
    def test_k4_pendant(self, k4_pendant):
        res = charikar_densest(k4_pendant)
        assert res.density == Fraction(3, 2)  # finds K4 itself here
        assert res.density >= ref_dmax(k4_pendant) / 2

    def test_single_edge(self):
        res = charikar_densest(WeightedGraph(2, [(0, 1)]))
        assert res.vertices == frozenset({0, 1})
        assert res.density == Fraction(1, 2)

    def test_k3(self, k3):
        res = charikar_densest(k3)
        assert res.vertices == frozenset(range(3))
        assert res.density == 1

    def test_empty_graph_rejected(self):
        with pytest.raises(ParameterError):
            charikar_densest(WeightedGraph(0, []))

    def test_two_approx_exhaustive_small(self):
        for g in _all_graphs_up_to(4):
            assert charikar_densest(g).density >= ref_dmax(g) / 2

    def test_guarantee_label(self, k3):
        res = charikar_densest(k3)
        assert (res.method, res.guarantee) == ("charikar", "2")
