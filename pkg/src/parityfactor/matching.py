"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

Vertices are scanned in ascending order and neighbour lists are sorted, so the
returned matching depends only on the input graph.
"""

from __future__ import annotations

from collections import deque

from .errors import UnsupportedInputError
from .graph import Graph

__all__ = ["max_matching", "mate_array"]


def mate_array(n: int, adj: list[list[int]]) -> list[int]:
    """Return ``mate`` with ``mate[v]`` the partner of ``v`` or -1.

    ``adj`` must be symmetric, loop-free and sorted. Runs in O(n^3).
    """
    mate = [-1] * n
    # greedy start; augmentation fixes any suboptimal choices
    for v in range(n):
        if mate[v] == -1:
            for w in adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    parent = [-1] * n
    base = list(range(n))
    used = [False] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
            used[i] = False
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # odd cycle: contract the blossom onto its base
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        return to
                    used[mate[to]] = True
                    queue.append(mate[to])
        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        end = find_path(root)
        while end != -1:
            pv = parent[end]
            nxt = mate[pv]
            mate[end], mate[pv] = pv, end
            end = nxt
    return mate


def max_matching(H: Graph) -> list[tuple[int, int]]:
    """A maximum matching of the simple graph ``H`` as sorted ``(u, v)`` pairs, ``u < v``."""
    if not H.is_simple:
        raise UnsupportedInputError("max_matching expects a simple graph")
    adj = [list(H.neighbors(v)) for v in range(H.n)]
    mate = mate_array(H.n, adj)
    return [(v, mate[v]) for v in range(H.n) if mate[v] > v]
