"""Graph builders: standard families, sequential joins, the extremal graphs
H(r, eta), splicing, and the tightness family F(r, h, l).

Every builder numbers vertices block by block in argument order.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil

from .errors import DomainError, InputError
from .graph import Graph

__all__ = [
    "complete_graph",
    "empty_graph",
    "cycle_graph",
    "complete_bipartite",
    "disjoint_union",
    "disjoint_copies",
    "complement",
    "sequential_join",
    "standard",
    "extremal_H",
    "extremal_H_partition",
    "splice",
    "FamilyInstance",
    "family_F",
    "remark_examples",
    "remark_condition_holds",
]


def _positive(name: str, value: int, minimum: int = 1) -> None:
    if not isinstance(value, int) or value < minimum:
        raise InputError(f"{name} must be an integer >= {minimum}, got {value!r}")


def complete_graph(n: int) -> Graph:
    _positive("n", n, 0)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    _positive("n", n, 0)
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    _positive("n", n, 3)
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(h: int, l: int) -> Graph:
    """K_{h,l}; the h-side is 0..h-1, the l-side h..h+l-1."""
    _positive("h", h)
    _positive("l", l)
    return Graph.from_edges(h + l, [(i, h + j) for i in range(h) for j in range(l)])


def disjoint_union(*graphs: Graph) -> Graph:
    pairs, loops, offset = [], {}, 0
    for G in graphs:
        pairs.extend((u + offset, v + offset) for u, v, m in G.edges for _ in range(m))
        loops.update({v + offset: c for v, c in G.loops})
        offset += G.n
    return Graph.from_edges(offset, pairs, loops)


def disjoint_copies(G: Graph, m: int) -> Graph:
    _positive("m", m, 0)
    return disjoint_union(*([G] * m))


def complement(G: Graph) -> Graph:
    if not G.is_simple:
        raise InputError("complement is defined for simple graphs")
    present = {(u, v) for u, v, _ in G.edges}
    return Graph.from_edges(
        G.n, [(i, j) for i in range(G.n) for j in range(i + 1, G.n) if (i, j) not in present]
    )


def sequential_join(*graphs: Graph) -> Graph:
    """G_1 v G_2 v ... v G_t: all edges between consecutive blocks only."""
    if len(graphs) < 2:
        raise InputError("a join needs at least two graphs")
    base = disjoint_union(*graphs)
    starts = [0]
    for G in graphs:
        starts.append(starts[-1] + G.n)
    extra = [
        (a, b)
        for i in range(len(graphs) - 1)
        for a in range(starts[i], starts[i + 1])
        for b in range(starts[i + 1], starts[i + 2])
    ]
    return Graph.from_edges(base.n, base.edge_list() + extra)


def standard(kind: str, *args, **params) -> Graph:
    """Dispatch by name: complete, empty, cycle, bipartite, copies, union, complement, join."""
    builders = {
        "complete": complete_graph,
        "empty": empty_graph,
        "cycle": cycle_graph,
        "bipartite": complete_bipartite,
        "copies": disjoint_copies,
        "union": disjoint_union,
        "complement": complement,
        "join": sequential_join,
    }
    if kind not in builders:
        raise InputError(f"unknown graph kind {kind!r}")
    return builders[kind](*args, **params)


# -- extremal graphs ---------------------------------------------------------------


def _check_r_eta(r: int, eta: int) -> None:
    if not (isinstance(r, int) and isinstance(eta, int) and r > eta >= 1):
        raise DomainError(f"need integers r > eta >= 1, got r={r!r}, eta={eta!r}")


def _H_blocks(r: int, eta: int) -> list[Graph]:
    K2 = complete_graph(2)
    if r % 2 == 0 or eta % 2 == 0:
        k = eta // 2
        clique = complete_graph(r + 1 - 2 * k)
        return [clique] if k == 0 else [complement(disjoint_copies(K2, k)), clique]
    if eta >= 3:
        return [complement(cycle_graph(eta)), complement(disjoint_copies(K2, (r + 2 - eta) // 2))]
    return [complete_graph(1), complement(disjoint_copies(K2, (r - 1) // 2)), K2]


def extremal_H(r: int, eta: int) -> Graph:
    """The graph H(r, eta) whose spectral radius is rho(r, eta).

    * some of r, eta even:  co(floor(eta/2) K2) v K_{r+1-2 floor(eta/2)}
    * both odd, eta >= 3:   co(C_eta) v co(((r+2-eta)/2) K2)
    * r odd, eta = 1:       K1 v co(((r-1)/2) K2) v K2
    """
    _check_r_eta(r, eta)
    blocks = _H_blocks(r, eta)
    return blocks[0] if len(blocks) == 1 else sequential_join(*blocks)


def extremal_H_partition(r: int, eta: int) -> list[tuple[int, ...]]:
    """Vertex sets of the join blocks of H(r, eta); an equitable partition."""
    _check_r_eta(r, eta)
    out, start = [], 0
    for B in _H_blocks(r, eta):
        out.append(tuple(range(start, start + B.n)))
        start += B.n
    return out


# -- splicing and F(r, h, l) -----------------------------------------------------------


def splice(H: Graph, u: int, B: Graph, a: int) -> Graph:
    """Replace vertex ``u`` of ``H`` by a copy of ``B``.

    Each edge uw is re-attached from w to a vertex of B so that every B-vertex
    reaches degree ``a``; if deg(u) = b + 1 the surplus edge lands on the
    lowest-id B-vertex, which ends at ``a + 1``. Neighbours w are handled in
    ascending order and deficiency slots are filled round-robin (every
    deficient vertex gets its first slot before any gets its second).

    The result keeps H's vertices except ``u`` in order, followed by B's.
    """
    if not (H.is_simple and B.is_simple):
        raise InputError("splice expects simple graphs")
    if not 0 <= u < H.n:
        raise InputError(f"vertex {u} not in H")
    if B.max_degree != a:
        raise InputError(f"max degree of B is {B.max_degree}, expected {a}")
    deficit = [a - d for d in B.degrees]
    b = sum(deficit)
    nbrs = list(H.neighbors(u))
    if len(nbrs) not in (b, b + 1):
        raise InputError(f"vertex {u} has degree {len(nbrs)}, splice needs {b} or {b + 1}")
    slots = [x for level in range(max(deficit, default=0)) for x in range(B.n) if deficit[x] > level]
    if len(nbrs) == b + 1:
        slots.append(0)
    relabel = lambda v: v if v < u else v - 1
    offset = H.n - 1
    pairs = [(relabel(x), relabel(y)) for x, y, _ in H.edges if u not in (x, y)]
    pairs.extend((x + offset, y + offset) for x, y, _ in B.edges)
    pairs.extend((relabel(w), slot + offset) for w, slot in zip(nbrs, slots))
    return Graph.from_edges(H.n - 1 + B.n, pairs)


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    U: tuple[int, ...]
    copies: tuple[tuple[int, ...], ...]
    params: tuple[int, int, int]  # (r, h, l)

    def to_json(self) -> dict:
        r, h, l = self.params
        return {
            "U": list(self.U),
            "copies": [list(c) for c in self.copies],
            "params": {"r": r, "h": h, "l": l},
        }


def family_F(r: int, h: int, l: int) -> FamilyInstance:
    """K_{h,l} with H(r, h) spliced into every degree-h vertex.

    U(F) gets ids 0..h-1; copy i occupies the i-th following block of
    |V(H(r, h))| ids.
    """
    if not all(isinstance(x, int) for x in (r, h, l)) or not l >= r > h >= 1:
        raise DomainError(f"F(r, h, l) needs l >= r > h >= 1, got r={r}, h={h}, l={l}")
    B = extremal_H(r, h)
    G = complete_bipartite(h, l)
    for _ in range(l):
        # the next unreplaced degree-h vertex always sits at id h
        G = splice(G, h, B, r)
    copies = tuple(tuple(range(h + i * B.n, h + (i + 1) * B.n)) for i in range(l))
    return FamilyInstance(G, tuple(range(h)), copies, (r, h, l))


def remark_condition_holds(r: int, h: int, b: int) -> bool:
    """Parity side conditions plus max(b, h) < ceil(2r / (r - bh)) = r (needs bh < r)."""
    if not (r > h >= 2 and b % 2 == 1 and (r - h) % 2 == 0 and b * h < r):
        return False
    bound = ceil(2 * r / (r - b * h))
    return bound == r and max(b, h) < bound


def remark_examples(k: int) -> list[tuple[int, int, int]]:
    """The four parameter triples (r, h, b) listed for a given k >= 3.

    Each triple is checked for r > h >= 2, b odd and r = h (mod 2). Whether the
    ceiling condition also holds is reported by :func:`remark_condition_holds`;
    for the second family it does not (b h exceeds r).
    """
    if not isinstance(k, int) or k < 3:
        raise DomainError(f"k must be an integer >= 3, got {k!r}")
    triples = [(4 * k, 2, 2 * k - 1), (2 * k + 2, 2 * k, 3), (6 * k - 1, 3, 2 * k - 1), (6 * k - 1, 2 * k - 1, 3)]
    for r, h, b in triples:
        if not (r > h >= 2 and b % 2 == 1 and (r - h) % 2 == 0):
            raise DomainError(f"triple {(r, h, b)} violates the side conditions")
    return triples
