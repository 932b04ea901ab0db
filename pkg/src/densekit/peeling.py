"""Greedy minimum-degree peeling and the solvers built directly on it.

One peel of the graph yields the removal order, the degree of each vertex
at removal time, and the weight/density of every suffix subgraph. Cores at
any threshold and the densest suffix of any minimum size are then answered
from the stored trace without touching the graph again.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from heapq import heapify, heappop, heappush
from typing import Optional

from .errors import ParameterError
from .graph import Weight, WeightedGraph
from .results import SubgraphResult, make_result


@dataclass
class PeelingTrace:
    """Full record of one peel.

    ``order[t]`` is the vertex removed at step t (t = 0 first); the suffix
    subgraph of size i consists of the last i removed vertices. Suffix
    weights are indexed by suffix size, so ``suffix_weights[i]`` is the
    total edge weight among those i vertices (index 0 is 0).
    """

    order: list[int]
    removal_degrees: list[Weight]
    suffix_weights: list[Weight]
    _densities: Optional[list[Fraction]] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.order)

    def suffix(self, i: int) -> frozenset[int]:
        """Vertex set of the suffix subgraph on i vertices."""
        if not (0 <= i <= self.n):
            raise ParameterError(f"suffix size {i} out of range 0..{self.n}")
        return frozenset(self.order[self.n - i:])

    def suffix_weight(self, i: int) -> Weight:
        return self.suffix_weights[i]

    def suffix_density(self, i: int) -> Fraction:
        if i < 1:
            raise ParameterError("density is undefined for the empty suffix")
        return Fraction(self.suffix_weights[i], i)

    @property
    def suffix_densities(self) -> list[Fraction]:
        """Densities of all suffixes, indexed 1..n (index 0 is unused)."""
        if self._densities is None:
            self._densities = [Fraction(0)] + [
                Fraction(self.suffix_weights[i], i) for i in range(1, self.n + 1)
            ]
        return self._densities

    def densest_suffix(self, min_size: int = 1) -> int:
        """Size of the densest suffix with at least min_size vertices.

        Ties go to the largest suffix. Comparison is by cross
        multiplication, so it is exact for int and Fraction weights alike.
        """
        if not (1 <= min_size <= self.n):
            raise ParameterError(f"min_size {min_size} out of range 1..{self.n}")
        best = min_size
        best_w = self.suffix_weights[min_size]
        for i in range(min_size + 1, self.n + 1):
            w = self.suffix_weights[i]
            if w * best >= best_w * i:
                best, best_w = i, w
        return best

    def core_index(self, w: Weight) -> int:
        """Largest suffix size whose removal degree is >= w, or 0."""
        n = self.n
        for t, r in enumerate(self.removal_degrees):
            if r >= w:
                return n - t
        return 0


def _peel_uniform(n: int, indptr: list[int], nbr: list[int]) -> tuple[list[int], list[int]]:
    """Bucket peel for equal-weight graphs; degrees are neighbor counts.

    Runs in O(n + m): every vertex enters at most one bucket per degree
    decrease, and the bucket cursor only rescans after a decrease. Buckets
    are kept as min-heaps of ids so degree ties break to the smallest id.
    """
    deg = [indptr[v + 1] - indptr[v] for v in range(n)]
    maxd = max(deg, default=0)
    buckets: list[list[int]] = [[] for _ in range(maxd + 1)]
    for v in range(n):
        buckets[deg[v]].append(v)  # ascending ids form a valid heap
    removed = bytearray(n)
    order: list[int] = []
    rdeg: list[int] = []
    d = 0
    for _ in range(n):
        while True:
            b = buckets[d]
            while b and (removed[b[0]] or deg[b[0]] != d):
                heappop(b)
            if b:
                break
            d += 1
        v = heappop(buckets[d])
        removed[v] = 1
        order.append(v)
        rdeg.append(d)
        for j in range(indptr[v], indptr[v + 1]):
            u = nbr[j]
            if not removed[u]:
                du = deg[u] - 1
                deg[u] = du
                heappush(buckets[du], u)
                if du < d:
                    d = du
    return order, rdeg


def _peel_weighted(g: WeightedGraph) -> tuple[list[int], list[Weight]]:
    """Lazy-deletion heap peel for graphs with mixed weights."""
    n = g.n
    deg = list(g.weighted_degree)
    heap: list[tuple[Weight, int]] = [(deg[v], v) for v in range(n)]
    heapify(heap)
    removed = bytearray(n)
    order: list[int] = []
    rdeg: list[Weight] = []
    indptr, nbr, wgt = g._indptr, g._nbr, g._wgt
    if wgt is None:
        wgt = [g.uniform_weight] * len(nbr)
    while heap:
        dv, v = heappop(heap)
        if removed[v] or deg[v] != dv:
            continue
        removed[v] = 1
        order.append(v)
        rdeg.append(dv)
        for j in range(indptr[v], indptr[v + 1]):
            u = nbr[j]
            if not removed[u]:
                du = deg[u] - wgt[j]
                deg[u] = du
                heappush(heap, (du, u))
    return order, rdeg


def peel(g: WeightedGraph) -> PeelingTrace:
    """Repeatedly remove the minimum-weighted-degree vertex (ties: lowest id).

    Equal-weight graphs take a bucket-queue path that is linear in m;
    mixed-weight graphs use a lazy binary heap, O(m log n).
    """
    n = g.n
    if n == 0:
        return PeelingTrace(order=[], removal_degrees=[], suffix_weights=[0])
    w0 = g.uniform_weight
    if w0 is not None:
        order, counts = _peel_uniform(n, g._indptr, g._nbr)
        rdeg: list[Weight] = counts if w0 == 1 else [c * w0 for c in counts]
    else:
        order, rdeg = _peel_weighted(g)

    # Each edge is dropped exactly once, by its first-removed endpoint, so
    # the removal degrees of the last i vertices sum to the suffix weight.
    sw: list[Weight] = [0] * (n + 1)
    acc: Weight = 0
    for t in range(n - 1, -1, -1):
        acc += rdeg[t]
        sw[n - t] = acc
    return PeelingTrace(order=order, removal_degrees=rdeg, suffix_weights=sw)


@dataclass(frozen=True)
class CoreResult:
    """Maximal induced subgraph with minimum weighted degree >= threshold."""

    threshold: Weight
    core: frozenset[int]
    index: int


def w_core(g: WeightedGraph, w: Weight, trace: Optional[PeelingTrace] = None) -> CoreResult:
    """The w-core of g, read off the peeling trace.

    A threshold above every removal degree yields the empty core. Pass a
    precomputed trace to answer many thresholds from one peel.
    """
    if trace is None:
        trace = peel(g)
    i = trace.core_index(w)
    return CoreResult(threshold=w, core=trace.suffix(i), index=i)


def _check_k(g: WeightedGraph, k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be a positive integer, got {k!r}")
    if k > g.n:
        raise ParameterError(f"k={k} exceeds vertex count n={g.n}")


def chalk(g: WeightedGraph, k: int, trace: Optional[PeelingTrace] = None) -> SubgraphResult:
    """Densest peel suffix with at least k vertices; 3-approximate for
    the best density among subgraphs of size >= k.

    Density ties among suffixes go to the larger one.
    """
    _check_k(g, k)
    if trace is None:
        trace = peel(g)
    i = trace.densest_suffix(min_size=k)
    return make_result(g, trace.suffix(i), method="chalk", guarantee="3")


def charikar_densest(g: WeightedGraph) -> SubgraphResult:
    """Densest peel suffix overall; 2-approximate densest subgraph."""
    if g.n < 1:
        raise ParameterError("densest subgraph is undefined for the empty graph")
    res = chalk(g, 1)
    return replace(res, method="charikar", guarantee="2")
