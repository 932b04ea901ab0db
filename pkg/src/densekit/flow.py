"""Max-flow/min-cut machinery and the parametric family of density maximizers.

Capacities may be ints or Fractions; the solver clears denominators and
runs Dinic's algorithm on integers, so results are exact. For a graph g
and a charge alpha per vertex, the excess network's minimum cut finds the
vertex set maximizing (internal weight) - alpha * (set size); sweeping
alpha upward yields a nested chain of maximizers with at most n
breakpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Union

from .errors import ParameterError
from .graph import Weight, WeightedGraph, as_weight


class FlowNetwork:
    """Directed capacitated network with a designated source and sink."""

    def __init__(self, num_nodes: int, source: int, sink: int) -> None:
        if source == sink:
            raise ParameterError("source and sink must differ")
        if not (0 <= source < num_nodes and 0 <= sink < num_nodes):
            raise ParameterError("source/sink out of range")
        self.num_nodes = num_nodes
        self.source = source
        self.sink = sink
        self.arcs: list[tuple[int, int, Weight]] = []

    def add_arc(self, u: int, v: int, capacity: Weight) -> None:
        if not (0 <= u < self.num_nodes and 0 <= v < self.num_nodes):
            raise ParameterError(f"arc endpoint out of range: ({u}, {v})")
        capacity = as_weight(capacity) if capacity != 0 else 0
        if capacity < 0:
            raise ParameterError(f"negative capacity on arc ({u}, {v})")
        self.arcs.append((u, v, capacity))


@dataclass(frozen=True)
class FlowResult:
    """A solved max-flow: exact value plus both canonical minimum cuts.

    ``min_source_side`` is the set reachable from the source in the
    residual network (the smallest source side of any minimum cut);
    ``max_source_side`` is the complement of the set that can still reach
    the sink (the largest source side).
    """

    value: Weight
    min_source_side: frozenset[int]
    max_source_side: frozenset[int]


def _scaled_caps(arcs) -> tuple[list[int], int]:
    denom = 1
    for _, _, c in arcs:
        if isinstance(c, Fraction):
            denom = lcm(denom, c.denominator)
    caps = [int(c * denom) for _, _, c in arcs]
    return caps, denom


def solve_max_flow(net: FlowNetwork) -> FlowResult:
    """Dinic's algorithm; exact on rational capacities."""
    n = net.num_nodes
    s, t = net.source, net.sink
    caps, denom = _scaled_caps(net.arcs)

    head: list[list[int]] = [[] for _ in range(n)]
    to: list[int] = []
    cap: list[int] = []
    for (u, v, _), c in zip(net.arcs, caps):
        head[u].append(len(to))
        to.append(v)
        cap.append(c)
        head[v].append(len(to))
        to.append(u)
        cap.append(0)

    level = [-1] * n

    def bfs() -> bool:
        for i in range(n):
            level[i] = -1
        level[s] = 0
        queue = [s]
        for u in queue:
            for e in head[u]:
                v = to[e]
                if cap[e] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level[t] >= 0

    flow = 0
    while bfs():
        it = [0] * n
        path: list[int] = []
        u = s
        while True:
            if u == t:
                b = min(cap[e] for e in path)
                for e in path:
                    cap[e] -= b
                    cap[e ^ 1] += b
                flow += b
                path.clear()
                u = s
                continue
            moved = False
            while it[u] < len(head[u]):
                e = head[u][it[u]]
                v = to[e]
                if cap[e] > 0 and level[v] == level[u] + 1:
                    path.append(e)
                    u = v
                    moved = True
                    break
                it[u] += 1
            if not moved:
                if u == s:
                    break
                level[u] = -1
                e = path.pop()
                u = to[e ^ 1]
                it[u] += 1

    # Minimal source side: residual reachability from the source.
    seen = bytearray(n)
    seen[s] = 1
    queue = [s]
    for u in queue:
        for e in head[u]:
            v = to[e]
            if cap[e] > 0 and not seen[v]:
                seen[v] = 1
                queue.append(v)
    min_side = frozenset(i for i in range(n) if seen[i])

    # Maximal source side: complement of the nodes that still reach the sink.
    rev: list[list[int]] = [[] for _ in range(n)]
    for e in range(len(to)):
        if cap[e] > 0:
            rev[to[e]].append(to[e ^ 1])
    reach_t = bytearray(n)
    reach_t[t] = 1
    queue = [t]
    for v in queue:
        for u in rev[v]:
            if not reach_t[u]:
                reach_t[u] = 1
                queue.append(u)
    max_side = frozenset(i for i in range(n) if not reach_t[i])

    value: Weight = flow if denom == 1 else as_weight(Fraction(flow, denom))
    return FlowResult(value=value, min_source_side=min_side, max_source_side=max_side)


def max_flow_min_cut(net: FlowNetwork) -> tuple[Weight, frozenset[int]]:
    """Maximum flow value and the minimal source side of a minimum cut."""
    res = solve_max_flow(net)
    return res.value, res.min_source_side


# Excess network node layout: 0 = source, 1 = sink, vertex v -> 2 + v,
# edge j -> 2 + n + j.

def excess_network(g: WeightedGraph, alpha: Weight) -> FlowNetwork:
    """Cut network whose min cut encodes max over H of W(H) - alpha*|H|.

    Source feeds each edge node with the edge's weight; edge nodes feed
    both endpoints with effectively infinite capacity; every vertex pays
    alpha to the sink. A minimum cut keeps an edge on the source side
    exactly when both endpoints stay, so its capacity is
    W(G) - (W(H) - alpha*|H|) for the source-side vertex set H.
    """
    alpha = as_weight(alpha) if alpha != 0 else 0
    if alpha < 0:
        raise ParameterError(f"alpha must be non-negative, got {alpha}")
    n, m = g.n, g.m
    net = FlowNetwork(2 + n + m, source=0, sink=1)
    inf = g.total_weight + 1
    for j, (u, v, w) in enumerate(g.iter_edges()):
        enode = 2 + n + j
        net.add_arc(0, enode, w)
        net.add_arc(enode, 2 + u, inf)
        net.add_arc(enode, 2 + v, inf)
    if alpha > 0:
        for v in range(n):
            net.add_arc(2 + v, 1, alpha)
    return net


def best_excess_set(g: WeightedGraph, alpha: Weight) -> tuple[frozenset[int], Weight]:
    """Largest vertex set maximizing W(H) - alpha*|H|, with that maximum."""
    net = excess_network(g, alpha)
    res = solve_max_flow(net)
    side = res.max_source_side
    h = frozenset(v for v in range(g.n) if 2 + v in side)
    value = g.total_weight - res.value
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)
    return h, value


@dataclass
class NestedFamily:
    """Breakpoints of alpha and the nested chain of maximizers.

    chain[j] is the largest maximizer of W(H) - alpha*|H| for alpha
    strictly between breakpoints[j-1] and breakpoints[j] (before the first
    breakpoint for j=0, after the last for j=len(breakpoints), where the
    chain ends with the empty set). weights[j] is the internal edge weight
    of chain[j].
    """

    breakpoints: list[Fraction]
    chain: list[frozenset[int]]
    weights: list[Weight]

    @property
    def sizes(self) -> list[int]:
        return [len(s) for s in self.chain]

    def value_at(self, alpha: Weight) -> Weight:
        """Maximum of W(H) - alpha*|H| over all vertex sets."""
        return max(w - alpha * len(s) for s, w in zip(self.chain, self.weights))

    def maximizer_at(self, alpha: Weight) -> frozenset[int]:
        """Largest chain member attaining value_at(alpha)."""
        best = self.value_at(alpha)
        for s, w in zip(self.chain, self.weights):
            if w - alpha * len(s) == best:
                return s
        raise AssertionError("chain lost its own maximum")


def parametric_family(g: WeightedGraph) -> NestedFamily:
    """All maximizers of W(H) - alpha*|H| as alpha sweeps upward.

    Breakpoints are located by divide and conquer on alpha: an interval
    whose endpoint maximizers have equal size holds no breakpoint, and an
    interval is split where the endpoint objective lines cross. This
    solves O(number of breakpoints) max-flow problems.
    """
    total = g.total_weight
    s_full, w_full = best_excess_set(g, 0)
    hi_alpha = Fraction(total + 1)
    s_empty, w_empty = best_excess_set(g, hi_alpha)

    transitions: list[tuple[Fraction, frozenset[int], Weight, frozenset[int], Weight]] = []
    stack = [(s_full, w_full, s_empty, w_empty)]
    while stack:
        s_lo, w_lo, s_hi, w_hi = stack.pop()
        if len(s_lo) == len(s_hi):
            continue
        a_star = Fraction(w_lo - w_hi, len(s_lo) - len(s_hi))
        s_star, v_star = best_excess_set(g, a_star)
        if len(s_star) == len(s_lo):
            transitions.append((a_star, s_lo, w_lo, s_hi, w_hi))
        else:
            assert len(s_hi) < len(s_star) < len(s_lo), "maximizer outside bracketing sizes"
            w_star = v_star + a_star * len(s_star)
            if isinstance(w_star, Fraction) and w_star.denominator == 1:
                w_star = int(w_star)
            stack.append((s_lo, w_lo, s_star, w_star))
            stack.append((s_star, w_star, s_hi, w_hi))

    transitions.sort(key=lambda tr: tr[0])
    chain = [s_full]
    weights = [w_full]
    breakpoints: list[Fraction] = []
    for a, s_l, _w_l, s_r, w_r in transitions:
        assert s_l == chain[-1], "transitions do not link into one chain"
        assert s_r < chain[-1], "chain members must be strictly nested"
        breakpoints.append(a)
        chain.append(s_r)
        weights.append(w_r)
    return NestedFamily(breakpoints=breakpoints, chain=chain, weights=weights)
