"""Weighted undirected graphs with exact rational edge weights.

Vertices are dense integers ``0..n-1``. Weights are kept as ``int`` or
``fractions.Fraction`` so that density comparisons are exact; graphs whose
weights are all integers never touch Fraction arithmetic on the hot paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import MalformedInputError, ParameterError

Weight = Union[int, Fraction]


def as_weight(value) -> Weight:
    """Coerce a number or token to an exact weight, ints preferred.

    Accepts int, Fraction, str tokens like "3", "2.5", "5/2", and floats
    (converted through their shortest decimal repr).
    """
    if isinstance(value, bool):
        raise MalformedInputError(f"bad weight {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, str):
        try:
            return int(value)
        except ValueError:
            pass
        try:
            value = Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInputError(f"bad weight token {value!r}") from exc
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    raise MalformedInputError(f"bad weight {value!r}")


class WeightedGraph:
    """Immutable simple undirected graph with positive edge weights.

    Adjacency is stored in compressed (CSR) form; per-vertex weighted
    degrees and the total weight are precomputed. Instances are safe to
    share across threads.
    """

    def __init__(self, n: int, edges: Iterable[Sequence]) -> None:
        if not isinstance(n, int) or n < 0:
            raise MalformedInputError(f"vertex count must be a non-negative int, got {n!r}")
        eu: list[int] = []
        ev: list[int] = []
        ew: list[Weight] = []
        seen: set[int] = set()
        for edge in edges:
            if len(edge) == 2:
                u, v = edge
                w: Weight = 1
            elif len(edge) == 3:
                u, v, w = edge
                w = as_weight(w)
            else:
                raise MalformedInputError(f"edge must be (u, v) or (u, v, w), got {edge!r}")
            if not isinstance(u, int) or not isinstance(v, int):
                raise MalformedInputError(f"vertex ids must be ints, got {edge!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise MalformedInputError(f"vertex id out of range in edge {edge!r} (n={n})")
            if u == v:
                raise MalformedInputError(f"self-loop at vertex {u}")
            if w <= 0:
                raise MalformedInputError(f"edge ({u}, {v}) has non-positive weight {w}")
            key = u * n + v if u < v else v * n + u
            if key in seen:
                raise MalformedInputError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            eu.append(u)
            ev.append(v)
            ew.append(w)

        self.n = n
        self._eu = eu
        self._ev = ev
        first = ew[0] if ew else 1
        uniform = all(w == first for w in ew)
        self.uniform_weight: Weight | None = first if uniform else None
        self._ew: list[Weight] | None = None if uniform else ew
        self._build_csr()

    @classmethod
    def from_arrays(cls, n: int, us, vs, weight: Weight = 1) -> "WeightedGraph":
        """Bulk constructor for large uniform-weight graphs.

        ``us``/``vs`` are integer array-likes of equal length. Validation and
        CSR assembly are vectorized; use this for graphs with millions of
        edges where the per-edge constructor would be too slow.
        """
        import numpy as np

        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        if us.shape != vs.shape or us.ndim != 1:
            raise MalformedInputError("endpoint arrays must be 1-d and equally long")
        weight = as_weight(weight)
        if weight <= 0:
            raise MalformedInputError(f"non-positive weight {weight}")
        m = len(us)
        if m:
            if int(us.min()) < 0 or int(vs.min()) < 0 or int(us.max()) >= n or int(vs.max()) >= n:
                raise MalformedInputError("vertex id out of range")
            if bool((us == vs).any()):
                raise MalformedInputError("self-loop present")
            lo = np.minimum(us, vs)
            hi = np.maximum(us, vs)
            keys = lo * np.int64(n) + hi
            if len(np.unique(keys)) != m:
                raise MalformedInputError("duplicate edge present")

        g = cls.__new__(cls)
        g.n = n
        g._eu = us.tolist()
        g._ev = vs.tolist()
        g._ew = None
        g.uniform_weight = weight

        src = np.concatenate([us, vs])
        dst = np.concatenate([vs, us])
        order = np.argsort(src, kind="stable")
        counts = np.bincount(src, minlength=n) if m else np.zeros(n, dtype=np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        g._indptr = indptr.tolist()
        g._nbr = dst[order].tolist()
        g._wgt = None
        g.weighted_degree = [int(c) * weight for c in counts.tolist()]
        g.total_weight = m * weight
        return g

    def _build_csr(self) -> None:
        n = self.n
        counts = [0] * n
        for u, v in zip(self._eu, self._ev):
            counts[u] += 1
            counts[v] += 1
        indptr = [0] * (n + 1)
        run = 0
        for v in range(n):
            indptr[v + 1] = run = run + counts[v]
        nbr = [0] * (2 * self.m)
        cursor = indptr[:-1].copy()
        uniform = self._ew is None
        wgt: list[Weight] | None = None if uniform else [0] * (2 * self.m)
        for idx in range(self.m):
            u, v = self._eu[idx], self._ev[idx]
            cu, cv = cursor[u], cursor[v]
            nbr[cu] = v
            nbr[cv] = u
            if wgt is not None:
                w = self._ew[idx]  # type: ignore[index]
                wgt[cu] = w
                wgt[cv] = w
            cursor[u] = cu + 1
            cursor[v] = cv + 1
        self._indptr = indptr
        self._nbr = nbr
        self._wgt = wgt
        if uniform:
            w0 = self.uniform_weight
            self.weighted_degree = [counts[v] * w0 for v in range(n)]
            self.total_weight = self.m * w0
        else:
            deg: list[Weight] = [0] * n
            total: Weight = 0
            for u, v, w in zip(self._eu, self._ev, self._ew):  # type: ignore[arg-type]
                deg[u] += w
                deg[v] += w
                total += w
            self.weighted_degree = deg
            self.total_weight = total

    @property
    def m(self) -> int:
        return len(self._eu)

    @property
    def edges(self) -> list[tuple[int, int, Weight]]:
        """Edge list as (u, v, weight) tuples, in input order."""
        return list(self.iter_edges())

    def iter_edges(self) -> Iterator[tuple[int, int, Weight]]:
        if self._ew is None:
            w0 = self.uniform_weight
            for u, v in zip(self._eu, self._ev):
                yield (u, v, w0)
        else:
            yield from zip(self._eu, self._ev, self._ew)

    def neighbors(self, v: int) -> Iterator[tuple[int, Weight]]:
        """Yield (neighbor, edge weight) pairs for vertex v."""
        lo, hi = self._indptr[v], self._indptr[v + 1]
        if self._wgt is None:
            w0 = self.uniform_weight
            for j in range(lo, hi):
                yield self._nbr[j], w0
        else:
            for j in range(lo, hi):
                yield self._nbr[j], self._wgt[j]

    def degree(self, v: int) -> Weight:
        return self.weighted_degree[v]

    def _canonical_edges(self) -> dict[tuple[int, int], Weight]:
        return {
            (u, v) if u < v else (v, u): w
            for u, v, w in self.iter_edges()
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self.n == other.n and self._canonical_edges() == other._canonical_edges()

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._canonical_edges().items())))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m}, W={self.total_weight})"


@dataclass(frozen=True)
class DensityReport:
    """Density of a vertex set: internal edge weight divided by set size."""

    subgraph: frozenset[int]
    total_weight: Weight
    density: Fraction


def _check_vertex_set(g: WeightedGraph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not isinstance(v, int) or not (0 <= v < g.n):
            raise ParameterError(f"vertex {v!r} not in graph with n={g.n}")
    return s


def induced_weight(g: WeightedGraph, s: Iterable[int]) -> Weight:
    """Total weight of edges with both endpoints in s."""
    s = _check_vertex_set(g, s)
    total: Weight = 0
    for v in s:
        for u, w in g.neighbors(v):
            if u > v and u in s:
                total += w
    return total


def density(g: WeightedGraph, s: Iterable[int]) -> DensityReport:
    """Density report for a nonempty vertex set."""
    s = _check_vertex_set(g, s)
    if not s:
        raise ParameterError("density is undefined for the empty vertex set")
    w = induced_weight(g, s)
    return DensityReport(subgraph=s, total_weight=w, density=Fraction(w, len(s)))


def parse_graph(text: Union[str, bytes], weighted: bool = True) -> WeightedGraph:
    """Parse whitespace-separated edge-list text into a WeightedGraph.

    Each data line is ``u v`` or, when ``weighted`` is true, ``u v w``.
    Lines starting with '#' and blank lines are ignored. Vertex ids are
    non-negative integers; the vertex count is one past the largest id
    seen, so ids may leave gaps (isolated vertices).
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    edges: list[tuple[int, int, Weight]] = []
    max_id = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) == 2:
            w: Weight = 1
        elif len(tokens) == 3 and weighted:
            w = as_weight(tokens[2])
        else:
            raise MalformedInputError(
                f"line {lineno}: expected 'u v'{' or u v w' if weighted else ''}, got {line!r}"
            )
        try:
            u = int(tokens[0])
            v = int(tokens[1])
        except ValueError as exc:
            raise MalformedInputError(f"line {lineno}: non-numeric vertex id in {line!r}") from exc
        if u < 0 or v < 0:
            raise MalformedInputError(f"line {lineno}: negative vertex id in {line!r}")
        edges.append((u, v, w))
        if u > max_id:
            max_id = u
        if v > max_id:
            max_id = v
    return WeightedGraph(max_id + 1, edges)


def format_weight(w: Weight) -> str:
    """Exact text form of a weight; round-trips through as_weight."""
    if isinstance(w, Fraction):
        return f"{w.numerator}/{w.denominator}"
    return str(w)


def serialize_graph(g: WeightedGraph) -> str:
    """Edge-list text for g; inverse of parse_graph for parsed graphs.

    Isolated vertices above the largest edge endpoint cannot be expressed
    in the edge-list format and are dropped on a round trip.
    """
    lines = []
    for u, v, w in g.iter_edges():
        if w == 1:
            lines.append(f"{u} {v}")
        else:
            lines.append(f"{u} {v} {format_weight(w)}")
    return "\n".join(lines) + ("\n" if lines else "")
