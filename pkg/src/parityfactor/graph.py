"""Undirected multigraphs with loops, cut queries, edge connectivity and text I/O.

Vertices are the integers ``0..n-1``. A loop contributes 2 to the degree of its
vertex. Graph values are immutable; derived data is cached on first use.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from .errors import InputError, ParseError

__all__ = [
    "Graph",
    "vertex_set",
    "degree_sum",
    "cut_size",
    "components",
    "edge_connectivity",
    "parse_graph",
    "serialize_graph",
]


@dataclass(frozen=True)
class Graph:
    """A multigraph on vertices ``0..n-1``.

    ``edges`` holds ``(u, v, multiplicity)`` with ``u < v`` sorted ascending;
    ``loops`` holds ``(v, count)`` with ``count >= 1`` sorted by vertex. Use
    :meth:`from_edges` to build one from an arbitrary pair list.
    """

    n: int
    edges: tuple[tuple[int, int, int], ...] = ()
    loops: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or self.n < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {self.n!r}")
        prev = None
        for u, v, mult in self.edges:
            if not (0 <= u < v < self.n):
                raise InputError(f"invalid edge ({u}, {v}) for n={self.n}")
            if mult < 1:
                raise InputError(f"edge ({u}, {v}) has multiplicity {mult}")
            if prev is not None and (u, v) <= prev:
                raise InputError("edges must be sorted and unique; use Graph.from_edges")
            prev = (u, v)
        prev_v = -1
        for v, count in self.loops:
            if not (0 <= v < self.n) or count < 1 or v <= prev_v:
                raise InputError(f"invalid loop entry ({v}, {count})")
            prev_v = v

    @classmethod
    def from_edges(
        cls,
        n: int,
        pairs: Iterable[tuple[int, int]] = (),
        loops: Mapping[int, int] | None = None,
    ) -> Graph:
        """Build a graph from an edge list; repeated pairs add multiplicity and
        ``(v, v)`` pairs become loops."""
        edge_count: Counter[tuple[int, int]] = Counter()
        loop_count: Counter[int] = Counter()
        for u, v in pairs:
            u, v = int(u), int(v)
            for x in (u, v):
                if not (0 <= x < n):
                    raise InputError(f"vertex {x} out of range for n={n}")
            if u == v:
                loop_count[u] += 1
            else:
                edge_count[(min(u, v), max(u, v))] += 1
        for v, c in (loops or {}).items():
            if not (0 <= v < n):
                raise InputError(f"vertex {v} out of range for n={n}")
            if c < 0:
                raise InputError(f"negative loop count at {v}")
            loop_count[int(v)] += int(c)
        edges = tuple((u, v, m) for (u, v), m in sorted(edge_count.items()))
        lps = tuple((v, c) for v, c in sorted(loop_count.items()) if c > 0)
        return cls(n, edges, lps)

    # -- basic queries -------------------------------------------------------

    @cached_property
    def loop_map(self) -> dict[int, int]:
        return dict(self.loops)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for u, v, m in self.edges:
            deg[u] += m
            deg[v] += m
        for v, c in self.loops:
            deg[v] += 2 * c
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ascending tuple of ``(neighbor, multiplicity)``; loops excluded."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, m in self.edges:
            adj[u].append((v, m))
            adj[v].append((u, m))
        return tuple(tuple(sorted(a)) for a in adj)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(w for w, _ in self.adjacency[v])

    @property
    def edge_total(self) -> int:
        """Number of non-loop edges counted with multiplicity."""
        return sum(m for _, _, m in self.edges)

    @property
    def loop_total(self) -> int:
        return sum(c for _, c in self.loops)

    @property
    def is_simple(self) -> bool:
        return not self.loops and all(m == 1 for _, _, m in self.edges)

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def edge_list(self) -> list[tuple[int, int]]:
        """Edges expanded by multiplicity, loops as ``(v, v)``."""
        out = [(u, v) for u, v, m in self.edges for _ in range(m)]
        out.extend((v, v) for v, c in self.loops for _ in range(c))
        out.sort()
        return out

    def weight_matrix(self) -> np.ndarray:
        """Symmetric matrix of edge multiplicities with zero diagonal."""
        w = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v, m in self.edges:
            w[u, v] = w[v, u] = m
        return w

    def adjacency_matrix(self) -> np.ndarray:
        if not self.is_simple:
            raise InputError("adjacency matrix requested for a non-simple graph")
        return self.weight_matrix().astype(float)

    def induced_subgraph(self, vertices: Iterable[int]) -> Graph:
        """The subgraph induced by ``vertices``, relabelled ``0..k-1`` in ascending order."""
        keep = vertex_set(self, vertices)
        index = {v: i for i, v in enumerate(keep)}
        pairs = [(index[u], index[v]) for u, v, m in self.edges
                 if u in index and v in index for _ in range(m)]
        loops = {index[v]: c for v, c in self.loops if v in index}
        return Graph.from_edges(len(keep), pairs, loops)

    def is_connected(self) -> bool:
        return self.n <= 1 or len(components(self)) == 1


def vertex_set(G: Graph, S: Iterable[int]) -> tuple[int, ...]:
    """Validate ``S`` against ``G`` and return it as a sorted duplicate-free tuple."""
    out = sorted({int(v) for v in S})
    for v in out:
        if not (0 <= v < G.n):
            raise InputError(f"vertex {v} out of range for n={G.n}")
    return tuple(out)


def degree_sum(G: Graph, S: Iterable[int]) -> int:
    deg = G.degrees
    return sum(deg[v] for v in vertex_set(G, S))


def cut_size(G: Graph, S: Iterable[int], T: Iterable[int]) -> int:
    """Number of edges (with multiplicity) joining ``S`` and ``T``."""
    S_, T_ = set(vertex_set(G, S)), set(vertex_set(G, T))
    if S_ & T_:
        raise InputError("cut_size requires disjoint vertex sets")
    if len(S_) > len(T_):
        S_, T_ = T_, S_
    return sum(m for v in S_ for w, m in G.adjacency[v] if w in T_)


def components(G: Graph, removed: Iterable[int] = ()) -> list[tuple[int, ...]]:
    """Connected components of ``G - removed``, ordered by smallest vertex."""
    gone = set(vertex_set(G, removed))
    seen = [False] * G.n
    for v in gone:
        seen[v] = True
    out = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in G.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def edge_connectivity(G: Graph) -> int:
    """Global minimum edge cut of the multigraph (Stoer-Wagner); loops ignored."""
    n = G.n
    if n < 2:
        raise InputError("edge connectivity needs at least 2 vertices")
    W = G.weight_matrix()
    active = np.ones(n, dtype=bool)
    best = None
    for remaining in range(n, 1, -1):
        # one minimum-cut phase over the currently active super-vertices
        start = int(np.flatnonzero(active)[0])
        in_a = np.zeros(n, dtype=bool)
        in_a[start] = True
        conn = W[start].copy()
        prev, last = start, start
        for _ in range(remaining - 1):
            cand = np.where(active & ~in_a, conn, -1)
            nxt = int(np.argmax(cand))
            prev, last = last, nxt
            in_a[nxt] = True
            conn += W[nxt]
        # conn[last] is the weight between the last-added vertex and all others
        cut = int(conn[last])
        if best is None or cut < best:
            best = cut
            if best == 0:
                return 0
        W[prev] += W[last]
        W[:, prev] += W[:, last]
        W[prev, prev] = 0
        W[last] = 0
        W[:, last] = 0
        active[last] = False
    return int(best)


# -- text format ----------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the line format ``p <n> <m>`` / ``e <u> <v> [mult]`` / ``l <v> <count>``."""
    n = declared_m = header_line = None
    pairs: list[tuple[int, int]] = []
    loops: Counter[int] = Counter()
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            nums = [int(t) for t in tok[1:]]
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        kind = tok[0]
        if kind == "p":
            if n is not None:
                raise ParseError(f"duplicate header (first at line {header_line})", lineno)
            if len(nums) != 2 or nums[0] < 0 or nums[1] < 0:
                raise ParseError("header must be 'p <n> <m>' with nonnegative values", lineno)
            n, declared_m = nums
            header_line = lineno
            continue
        if n is None:
            raise ParseError("entry before 'p' header", lineno)
        if kind == "e":
            if len(nums) not in (2, 3):
                raise ParseError("edge must be 'e <u> <v> [mult]'", lineno)
            u, v = nums[0], nums[1]
            mult = nums[2] if len(nums) == 3 else 1
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
            if u == v:
                raise ParseError("self-pair in 'e' line; use 'l' for loops", lineno)
            if mult < 1:
                raise ParseError("edge multiplicity must be >= 1", lineno)
            pairs.extend([(u, v)] * mult)
            edge_lines += 1
        elif kind == "l":
            if len(nums) != 2:
                raise ParseError("loop must be 'l <v> <count>'", lineno)
            v, c = nums
            if not (0 <= v < n):
                raise ParseError(f"vertex id out of range 0..{n - 1}", lineno)
            if c < 0:
                raise ParseError("loop count must be >= 0", lineno)
            loops[v] += c
        else:
            raise ParseError(f"unknown entry type {kind!r}", lineno)
    if n is None:
        raise ParseError("missing 'p <n> <m>' header")
    if edge_lines != declared_m:
        raise ParseError(f"header declares {declared_m} edge lines, found {edge_lines}", header_line)
    return Graph.from_edges(n, pairs, loops)


def serialize_graph(G: Graph) -> str:
    lines = [f"p {G.n} {len(G.edges)}"]
    for u, v, m in G.edges:
        lines.append(f"e {u} {v}" if m == 1 else f"e {u} {v} {m}")
    for v, c in G.loops:
        lines.append(f"l {v} {c}")
    return "\n".join(lines) + "\n"
