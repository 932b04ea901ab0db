from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from densekit import (
    MalformedInputError,
    ParameterError,
    WeightedGraph,
    density,
    induced_weight,
    parse_graph,
    serialize_graph,
)
from densekit.graph import as_weight

from .conftest import graphs, ref_induced_weight


class TestParse:
    def test_path(self):
        g = parse_graph("0 1\n1 2")
        assert (g.n, g.m, g.total_weight) == (3, 2, 2)

    def test_weighted_edge(self):
        g = parse_graph("0 1 2.5")
        assert (g.n, g.m) == (2, 1)
        assert g.total_weight == Fraction(5, 2)

    def test_duplicate_reversed(self):
        with pytest.raises(MalformedInputError):
            parse_graph("0 1\n1 0")

    def test_duplicate_same_orientation(self):
        with pytest.raises(MalformedInputError):
            parse_graph("0 1\n0 1 2")

    def test_self_loop(self):
        with pytest.raises(MalformedInputError):
            parse_graph("3 3")

    def test_nonpositive_weight(self):
        with pytest.raises(MalformedInputError):
            parse_graph("0 1 0")
        with pytest.raises(MalformedInputError):
            parse_graph("0 1 -2")

    def test_non_numeric(self):
        with pytest.raises(MalformedInputError):
            parse_graph("a b")
        with pytest.raises(MalformedInputError):
            parse_graph("0 1 abc")

    def test_comments_and_blanks(self):
        g = parse_graph("# header\n\n0 1\n  # indented comment\n1 2\n")
        assert (g.n, g.m) == (3, 2)

    def test_id_gap_gives_isolated_vertex(self):
        g = parse_graph("0 2")
        assert g.n == 3
        assert g.weighted_degree == [1, 0, 1]

    def test_unweighted_mode_rejects_third_column(self):
        with pytest.raises(MalformedInputError):
            parse_graph("0 1 2.5", weighted=False)

    def test_fraction_token(self):
        g = parse_graph("0 1 5/2")
        assert g.total_weight == Fraction(5, 2)

    def test_empty_text(self):
        g = parse_graph("# nothing\n")
        assert (g.n, g.m) == (0, 0)

    def test_bytes_input(self):
        g = parse_graph(b"0 1\n")
        assert g.m == 1


class TestConstruction:
    def test_degree_sum_is_twice_total(self, k4_pendant):
        assert sum(k4_pendant.weighted_degree) == 2 * k4_pendant.total_weight

    def test_adjacency_symmetric(self, k4_pendant):
        g = k4_pendant
        pairs = {(v, u, w) for v in range(g.n) for u, w in g.neighbors(v)}
        assert all((u, v, w) in pairs for v, u, w in pairs)

    def test_uniform_weight_detected(self, k4):
        assert k4.uniform_weight == 1
        g = WeightedGraph(2, [(0, 1, Fraction(5, 2))])
        assert g.uniform_weight == Fraction(5, 2)
        g = WeightedGraph(3, [(0, 1, 1), (1, 2, 2)])
        assert g.uniform_weight is None

    def test_from_arrays_matches_loop_constructor(self):
        g1 = WeightedGraph.from_arrays(4, [0, 1, 2], [1, 2, 3])
        g2 = WeightedGraph(4, [(0, 1), (1, 2), (2, 3)])
        assert g1 == g2
        assert g1.weighted_degree == g2.weighted_degree

    def test_from_arrays_rejects_duplicates(self):
        with pytest.raises(MalformedInputError):
            WeightedGraph.from_arrays(3, [0, 1], [1, 0])

    def test_out_of_range_vertex(self):
        with pytest.raises(MalformedInputError):
            WeightedGraph(2, [(0, 2)])

    def test_as_weight_normalizes_integral_fraction(self):
        assert as_weight("2.0") == 2
        assert isinstance(as_weight("2.0"), int)
        assert as_weight(2.5) == Fraction(5, 2)


class TestInducedWeight:
    def test_k3_full(self, k3):
        assert induced_weight(k3, {0, 1, 2}) == 3

    def test_k3_pair(self, k3):
        assert induced_weight(k3, {0, 1}) == 1

    def test_p3_ends(self, p3):
        assert induced_weight(p3, {0, 2}) == 0

    def test_rejects_foreign_vertex(self, p3):
        with pytest.raises(ParameterError):
            induced_weight(p3, {0, 7})


class TestDensity:
    def test_k3(self, k3):
        assert density(k3, {0, 1, 2}).density == 1

    def test_single_vertex(self, k3):
        assert density(k3, {1}).density == 0

    def test_k4(self, k4):
        assert density(k4, range(4)).density == Fraction(3, 2)

    def test_empty_set_rejected(self, k3):
        with pytest.raises(ParameterError):
            density(k3, set())


@settings(max_examples=60, deadline=None)
@given(g=graphs(), data=st.data())
def test_induced_weight_matches_reference_and_is_monotone(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1)))
    t = s | data.draw(st.sets(st.integers(0, g.n - 1)))
    assert induced_weight(g, s) == ref_induced_weight(g, s)
    assert induced_weight(g, s) <= induced_weight(g, t)


@settings(max_examples=60, deadline=None)
@given(g=graphs(), data=st.data())
def test_density_bounds(g, data):
    s = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    d = density(g, s).density
    assert d >= 0
    if g.m:
        wmax = max(w for _, _, w in g.iter_edges())
        assert d <= Fraction(len(s) - 1, 2) * wmax


@settings(max_examples=60, deadline=None)
@given(g=graphs())
def test_serialize_round_trip(g):
    again = parse_graph(serialize_graph(g))
    # Trailing isolated vertices are not expressible in edge-list text.
    assert again == WeightedGraph(again.n, [e for e in g.iter_edges()])
    if g.m and max(max(u, v) for u, v, _ in g.iter_edges()) == g.n - 1:
        assert again == g


def test_round_trip_of_parsed_text():
    text = "0 1 5/2\n1 2\n0 3 7\n"
    g = parse_graph(text)
    assert parse_graph(serialize_graph(g)) == g


def test_density_whole_graph(k4_pendant):
    g = k4_pendant
    assert density(g, range(g.n)).density == Fraction(g.total_weight, g.n)
