"""Exponential-time exact solvers and graph generators for ground truth.

Subset enumeration is the trusted oracle for every approximation-ratio
check: internal weights of all 2^n vertex subsets are computed by bitmask
DP over integer-scaled weights, so every optimum is an exact rational.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Iterator, Optional

from .errors import CapacityError, ParameterError
from .graph import Weight, WeightedGraph

DEFAULT_LIMIT = 20

PROBLEMS = ("densest", "dalks", "damks", "dks")

_SIZE_PRED = {
    "densest": lambda sz, k: True,
    "dalks": lambda sz, k: sz >= k,
    "damks": lambda sz, k: sz <= k,
    "dks": lambda sz, k: sz == k,
}


@dataclass(frozen=True)
class ExactAnswer:
    """Optimum density and a witness set for one problem instance."""

    problem: str
    k: Optional[int]
    optimum: Fraction
    witness: frozenset[int]


def _check_limit(g: WeightedGraph, limit: int) -> None:
    if g.n > limit:
        raise CapacityError(
            f"refusing subset enumeration on n={g.n} > limit={limit}"
        )


def _scaled_adjacency(g: WeightedGraph) -> tuple[list[list[tuple[int, int]]], int]:
    denom = 1
    for _, _, w in g.iter_edges():
        if isinstance(w, Fraction):
            denom = lcm(denom, w.denominator)
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for u, v, w in g.iter_edges():
        ws = int(w * denom)
        adj[u].append((v, ws))
        adj[v].append((u, ws))
    return adj, denom


def subset_weights(g: WeightedGraph, limit: int = DEFAULT_LIMIT) -> tuple[list[int], int]:
    """Scaled internal weight of every vertex subset, indexed by bitmask.

    Returns (weights, scale): the true weight of subset ``mask`` is
    ``weights[mask] / scale``.
    """
    _check_limit(g, limit)
    n = g.n
    adj, denom = _scaled_adjacency(g)
    wt = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        acc = wt[rest]
        for u, ws in adj[v]:
            if rest >> u & 1:
                acc += ws
        wt[mask] = acc
    return wt, denom


def brute_force(
    g: WeightedGraph,
    problem: str,
    k: Optional[int] = None,
    limit: int = DEFAULT_LIMIT,
) -> ExactAnswer:
    """Exact optimum by enumerating all feasible nonempty vertex subsets.

    Density ties break to the lexicographically smallest sorted vertex
    tuple, so answers are deterministic.
    """
    if problem not in PROBLEMS:
        raise ParameterError(f"unknown problem {problem!r}; expected one of {PROBLEMS}")
    if problem == "densest":
        if k is not None:
            raise ParameterError("densest takes no k")
    else:
        if not isinstance(k, int) or not (1 <= k <= g.n):
            raise ParameterError(f"k={k!r} out of range 1..{g.n}")
    if g.n == 0:
        raise ParameterError("no nonempty subsets in the empty graph")
    _check_limit(g, limit)

    wt, denom = subset_weights(g, limit)
    pred = _SIZE_PRED[problem]
    best_mask = -1
    best_w = 0
    best_sz = 1
    best_tuple: Optional[tuple[int, ...]] = None
    for mask in range(1, 1 << g.n):
        sz = mask.bit_count()
        if not pred(sz, k):
            continue
        w = wt[mask]
        if best_mask < 0:
            best_mask, best_w, best_sz = mask, w, sz
            continue
        lhs = w * best_sz
        rhs = best_w * sz
        if lhs > rhs:
            best_mask, best_w, best_sz = mask, w, sz
            best_tuple = None
        elif lhs == rhs:
            if best_tuple is None:
                best_tuple = _mask_tuple(best_mask)
            cand = _mask_tuple(mask)
            if cand < best_tuple:
                best_mask, best_w, best_sz = mask, w, sz
                best_tuple = cand
    if best_mask < 0:
        raise ParameterError(f"no feasible subset for {problem} with k={k}")
    return ExactAnswer(
        problem=problem,
        k=k,
        optimum=Fraction(best_w, denom * best_sz),
        witness=frozenset(_mask_tuple(best_mask)),
    )


def _mask_tuple(mask: int) -> tuple[int, ...]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def exact_size_profile(g: WeightedGraph, limit: int = DEFAULT_LIMIT) -> list[Optional[Fraction]]:
    """Best density per exact subset size; index k holds dk, index 0 is None.

    At a fixed size, maximizing density is maximizing weight, so one pass
    over all subsets suffices. dal/dam/dmax follow by taking maxima over
    suffix/prefix ranges of the returned list.
    """
    _check_limit(g, limit)
    n = g.n
    wt, denom = subset_weights(g, limit)
    best = [-1] * (n + 1)
    for mask in range(1, 1 << n):
        sz = mask.bit_count()
        if wt[mask] > best[sz]:
            best[sz] = wt[mask]
    return [None] + [Fraction(best[sz], denom * sz) for sz in range(1, n + 1)]


# ---------------------------------------------------------------------------
# Graph generators


def labeled_graphs(n: int) -> Iterator[WeightedGraph]:
    """All 2^(n choose 2) labeled unit-weight graphs on n vertices."""
    if not 0 <= n <= 6:
        raise CapacityError(f"exhaustive enumeration capped at n=6, got {n}")
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[j] for j in range(len(pairs)) if mask >> j & 1]
        yield WeightedGraph(n, edges)


def clique(n: int) -> WeightedGraph:
    return WeightedGraph(n, combinations(range(n), 2))


def star(n: int) -> WeightedGraph:
    return WeightedGraph(n, [(0, v) for v in range(1, n)])


def path(n: int) -> WeightedGraph:
    return WeightedGraph(n, [(v, v + 1) for v in range(n - 1)])


def clique_plus_pendant(n: int) -> WeightedGraph:
    """Clique on 0..n-2 with vertex n-1 hanging off vertex 0."""
    if n < 2:
        raise ParameterError("needs at least 2 vertices")
    edges = list(combinations(range(n - 1), 2))
    edges.append((0, n - 1))
    return WeightedGraph(n, edges)


def bridged_cliques(n: int) -> WeightedGraph:
    """Two cliques of near-equal size joined by a single bridge edge."""
    if n < 2:
        raise ParameterError("needs at least 2 vertices")
    a = n // 2
    edges = list(combinations(range(a), 2))
    edges += list(combinations(range(a, n), 2))
    edges.append((0, a))
    return WeightedGraph(n, edges)


def structured_graphs(n: int) -> list[WeightedGraph]:
    out = [clique(n), star(n), path(n)]
    if n >= 2:
        out.append(clique_plus_pendant(n))
        out.append(bridged_cliques(n))
    return out


def random_weight(rng: random.Random) -> Weight:
    """Random rational in (0, 10] with denominator at most 100."""
    w = Fraction(rng.randint(1, 1000), 100)
    return int(w) if w.denominator == 1 else w


def random_graph(
    rng: random.Random,
    n: int,
    weighted: bool = True,
    edge_prob: Optional[float] = None,
) -> WeightedGraph:
    if edge_prob is None:
        edge_prob = rng.choice([0.15, 0.3, 0.5, 0.7, 0.9])
    edges = []
    for u, v in combinations(range(n), 2):
        if rng.random() < edge_prob:
            w: Weight = random_weight(rng) if weighted else 1
            edges.append((u, v, w))
    return WeightedGraph(n, edges)


def random_graphs(
    count: int,
    seed: int,
    min_n: int = 1,
    max_n: int = 8,
    weighted: bool = True,
) -> Iterator[WeightedGraph]:
    """Seeded stream of random graphs with mixed densities."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_graph(rng, rng.randint(min_n, max_n), weighted)


def corpus(n: int, seed: int = 0, samples: int = 20) -> Iterator[WeightedGraph]:
    """Unit-weight ground-truth graphs on exactly n vertices.

    Exhaustive (all labeled graphs) for n <= 5; structured families plus
    seeded random samples for 6 <= n <= 8.
    """
    if not 1 <= n <= 8:
        raise ParameterError(f"corpus supports 1 <= n <= 8, got {n}")
    if n <= 5:
        yield from labeled_graphs(n)
        return
    yield from structured_graphs(n)
    rng = random.Random(seed)
    for _ in range(samples):
        yield random_graph(rng, n, weighted=False)


def random_gnm(n: int, m: int, seed: int) -> WeightedGraph:
    """Uniform random simple unit-weight graph with exactly m edges.

    Vectorized rejection sampling; intended for large performance-test
    instances.
    """
    import numpy as np

    if m > comb(n, 2):
        raise ParameterError(f"m={m} exceeds the {comb(n, 2)} possible edges")
    rng = np.random.default_rng(seed)
    keys = np.zeros(0, dtype=np.int64)
    while len(keys) < m:
        batch = int((m - len(keys)) * 1.3) + 16
        a = rng.integers(0, n, size=batch, dtype=np.int64)
        b = rng.integers(0, n, size=batch, dtype=np.int64)
        ok = a != b
        lo = np.minimum(a[ok], b[ok])
        hi = np.maximum(a[ok], b[ok])
        keys = np.unique(np.concatenate([keys, lo * np.int64(n) + hi]))
    keys = rng.permutation(keys)[:m]  # unique() sorts; don't bias toward low ids
    return WeightedGraph.from_arrays(n, keys // n, keys % n)
