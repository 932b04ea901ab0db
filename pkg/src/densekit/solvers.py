"""Problem-level solvers assembled from peeling and flow.

Covers exact densest subgraph, the flow-based 2-approximation for the
at-least-k problem (pad short chain members up to k), at-most-k oracles,
and the exactly-k approximation obtained by repeatedly calling an
at-most-k oracle, stripping the edges it found, and scoring every prefix
union of its answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from heapq import heappop, heappush
from typing import Callable, Iterable, Optional

from . import bruteforce
from .errors import OracleContractError, ParameterError
from .flow import NestedFamily, parametric_family
from .graph import Weight, WeightedGraph, induced_weight
from .peeling import _check_k, peel
from .results import SubgraphResult, make_result


def exact_densest(g: WeightedGraph, family: Optional[NestedFamily] = None) -> SubgraphResult:
    """Maximum-density subgraph, exact, via the parametric chain.

    The densest chain member attains the global optimum: just below the
    last breakpoint the maximizer's objective tends to zero, which forces
    its density to the maximum.
    """
    if g.n < 1:
        raise ParameterError("densest subgraph is undefined for the empty graph")
    if family is None:
        family = parametric_family(g)
    best: Optional[frozenset[int]] = None
    best_w: Weight = 0
    for s, w in zip(family.chain, family.weights):
        if not s:
            continue
        if best is None or w * len(best) > best_w * len(s):
            best, best_w = s, w
    assert best is not None
    return make_result(g, best, method="flow-exact", guarantee="exact")


def pad_to_size(g: WeightedGraph, s: Iterable[int], k: int) -> frozenset[int]:
    """Grow s to exactly k vertices.

    Correctness of the callers does not depend on which vertices are
    added; we take the highest weighted degrees (ties to the lowest id)
    because that tends to help the returned density in practice.
    """
    s = frozenset(s)
    if k > g.n:
        raise ParameterError(f"cannot pad to k={k} in a graph with n={g.n}")
    if len(s) > k:
        raise ParameterError(f"set of size {len(s)} already exceeds k={k}")
    if len(s) == k:
        return s
    wd = g.weighted_degree
    extras = sorted((v for v in range(g.n) if v not in s), key=lambda v: (-wd[v], v))
    return s | frozenset(extras[: k - len(s)])


def dalks_2approx(
    g: WeightedGraph,
    k: int,
    family: Optional[NestedFamily] = None,
) -> SubgraphResult:
    """2-approximation for the densest subgraph on at least k vertices.

    Every member of the parametric chain is padded up to k vertices if
    short, and the densest padded candidate wins. Pass a precomputed
    family to amortize the flow work across many k.
    """
    _check_k(g, k)
    if family is None:
        family = parametric_family(g)
    best: Optional[frozenset[int]] = None
    best_w: Weight = 0
    for s in family.chain:
        cand = pad_to_size(g, s, k) if len(s) < k else s
        w = induced_weight(g, cand)
        if best is None or w * len(best) > best_w * len(cand):
            best, best_w = cand, w
    assert best is not None
    return make_result(g, best, method="flow-2approx", guarantee="2")


def greedy_shrink(g: WeightedGraph, u: Iterable[int], k: int) -> frozenset[int]:
    """Shrink u to exactly k vertices by deleting minimum-degree vertices.

    Degrees are weighted and measured inside the shrinking induced
    subgraph; ties break to the lowest id. Removing a minimum-degree
    vertex loses at most an average share of the weight, which keeps the
    final density at least d(u) * (k-1)/(|u|-1) >= d(u) * k/(2|u|) for
    k >= 2.
    """
    alive = set(u)
    for v in alive:
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise ParameterError(f"vertex {v!r} not in graph with n={g.n}")
    if not isinstance(k, int) or k < 1:
        raise ParameterError(f"k must be a positive integer, got {k!r}")
    if k > len(alive):
        raise ParameterError(f"k={k} exceeds |u|={len(alive)}")
    deg: dict[int, Weight] = {}
    for v in alive:
        d: Weight = 0
        for x, w in g.neighbors(v):
            if x in alive:
                d += w
        deg[v] = d
    heap: list[tuple[Weight, int]] = sorted((deg[v], v) for v in alive)
    while len(alive) > k:
        d, v = heappop(heap)
        if v not in alive or deg[v] != d:
            continue
        alive.remove(v)
        for x, w in g.neighbors(v):
            if x in alive:
                deg[x] -= w
                heappush(heap, (deg[x], x))
    return frozenset(alive)


@dataclass(frozen=True)
class DamksOracle:
    """A pluggable at-most-k solver with its declared quality.

    The procedure must return at most beta*k vertices; when gamma is set
    the returned density is promised to be within 1/gamma of the best
    subgraph on at most k vertices. gamma=None marks a heuristic with no
    density promise.
    """

    name: str
    fn: Callable[[WeightedGraph, int], frozenset[int]]
    beta: Weight = 1
    gamma: Optional[Weight] = None

    def ratio_label(self) -> str:
        """Worst-case ratio of the exactly-k reduction driven by this oracle."""
        if self.gamma is None:
            return "heuristic"
        ratio = 4 * (self.gamma * self.gamma + self.gamma * self.beta)
        if isinstance(ratio, Fraction) and ratio.denominator == 1:
            ratio = int(ratio)
        return str(ratio)


def damks_bruteforce_oracle(
    g: WeightedGraph, k: int, limit: int = bruteforce.DEFAULT_LIMIT
) -> frozenset[int]:
    """Exact densest at-most-k set by enumeration (a (1,1)-oracle)."""
    _check_k(g, k)
    return bruteforce.brute_force(g, "damks", k, limit=limit).witness


def damks_peel_heuristic(g: WeightedGraph, k: int) -> frozenset[int]:
    """Densest peel suffix with at most k vertices; no density promise.

    Returns at most k vertices by construction. If every eligible suffix
    is edgeless the size-k suffix is returned.
    """
    _check_k(g, k)
    trace = peel(g)
    best, best_w = 1, trace.suffix_weights[1]
    for i in range(2, k + 1):
        w = trace.suffix_weights[i]
        if w * best >= best_w * i:
            best, best_w = i, w
    return trace.suffix(best)


def bruteforce_oracle(limit: int = bruteforce.DEFAULT_LIMIT) -> DamksOracle:
    return DamksOracle(
        name="exact",
        fn=lambda g, k: damks_bruteforce_oracle(g, k, limit=limit),
        beta=1,
        gamma=1,
    )


def peel_oracle() -> DamksOracle:
    return DamksOracle(name="peel", fn=damks_peel_heuristic, beta=1, gamma=None)


@dataclass(frozen=True)
class ReductionRound:
    """One oracle answer: its vertices and its weight in the graph it saw."""

    vertices: frozenset[int]
    size: int
    weight: Weight
    density: Fraction


@dataclass
class ReductionTrace:
    """Rounds, prefix unions, and candidates of the exactly-k reduction.

    Index t of prefix_unions/candidates corresponds to the union of the
    first t rounds; index 0 is the empty prefix, whose candidate is pure
    padding.
    """

    rounds: list[ReductionRound]
    prefix_unions: list[frozenset[int]]
    candidates: list[frozenset[int]]
    chosen: frozenset[int]


def _strip_edges(g: WeightedGraph, inside: frozenset[int]) -> WeightedGraph:
    kept = [
        (u, v, w)
        for u, v, w in g.iter_edges()
        if not (u in inside and v in inside)
    ]
    return WeightedGraph(g.n, kept)


def dks_via_damks(
    g: WeightedGraph, k: int, oracle: DamksOracle
) -> tuple[SubgraphResult, ReductionTrace]:
    """Approximate the densest exactly-k subgraph through an at-most-k oracle.

    Repeatedly ask the oracle for a dense set of at most k vertices,
    delete the edges it found, and continue until no edges remain. Every
    prefix union of the answers is then brought to exactly k vertices
    (padding if small, greedy shrinking if large) and the densest
    candidate is returned. With a (beta, gamma)-oracle the result is a
    4*(gamma^2 + gamma*beta)-approximation.
    """
    _check_k(g, k)
    method = f"damks-reduction[{oracle.name}]"
    label = oracle.ratio_label()

    rounds: list[ReductionRound] = []
    if k >= 2:
        # With k=1 every 1-vertex set has density 0 and the loop cannot
        # remove edges; the padding candidate below is already optimal.
        current = g
        while current.m > 0:
            found = frozenset(oracle.fn(current, k))
            if not found:
                raise OracleContractError(
                    f"oracle {oracle.name!r} returned an empty set while edges remain"
                )
            if len(found) > oracle.beta * k:
                raise OracleContractError(
                    f"oracle {oracle.name!r} returned {len(found)} vertices, "
                    f"more than beta*k = {oracle.beta * k}"
                )
            for v in found:
                if not (0 <= v < g.n):
                    raise OracleContractError(f"oracle vertex {v!r} out of range")
            w_in = induced_weight(current, found)
            if w_in == 0:
                raise OracleContractError(
                    f"oracle {oracle.name!r} removed no edges while edges remain"
                )
            rounds.append(
                ReductionRound(
                    vertices=found,
                    size=len(found),
                    weight=w_in,
                    density=Fraction(w_in, len(found)),
                )
            )
            current = _strip_edges(current, found)

    unions: list[frozenset[int]] = [frozenset()]
    for r in rounds:
        unions.append(unions[-1] | r.vertices)

    candidates: list[frozenset[int]] = []
    best: Optional[frozenset[int]] = None
    best_w: Weight = 0
    for u in unions:
        cand = pad_to_size(g, u, k) if len(u) <= k else greedy_shrink(g, u, k)
        candidates.append(cand)
        w = induced_weight(g, cand)
        if best is None or w * len(best) > best_w * len(cand):
            best, best_w = cand, w
    assert best is not None
    trace = ReductionTrace(
        rounds=rounds, prefix_unions=unions, candidates=candidates, chosen=best
    )
    return make_result(g, best, method=method, guarantee=label), trace
