"""Independent reference implementations used only by the tests.

Nothing here imports the package's algorithms; inputs are plain edge lists or
numpy arrays so a bug in the library cannot leak into its own oracle.
"""

from __future__ import annotations

import math

import networkx as nx
import numpy as np


def eig_desc(A: np.ndarray) -> np.ndarray:
    return np.sort(np.linalg.eigvalsh(np.asarray(A, dtype=float)))[::-1]


def adjacency(n: int, edges) -> np.ndarray:
    A = np.zeros((n, n))
    for u, v in edges:
        A[u, v] += 1
        A[v, u] += 1
    return A


def power_iteration(A: np.ndarray, iters: int = 5000, tol: float = 1e-13) -> float:
    """Spectral radius of a nonnegative symmetric matrix via shifted power iteration."""
    n = A.shape[0]
    M = A + np.eye(n)  # shift keeps the Perron root dominant for bipartite graphs
    x = np.ones(n) / math.sqrt(n)
    lam = 0.0
    for _ in range(iters):
        y = M @ x
        norm = np.linalg.norm(y)
        if norm == 0:
            return 0.0
        y /= norm
        new = float(y @ M @ y)
        if abs(new - lam) < tol:
            lam = new
            break
        lam, x = new, y
    return lam - 1.0


def brute_min_cut(n: int, edges) -> int:
    """Edge connectivity by checking every vertex bipartition."""
    best = math.inf
    for mask in range(1, 1 << (n - 1)):
        side = {v for v in range(n) if mask >> v & 1}
        best = min(best, sum(1 for u, v in edges if (u in side) != (v in side)))
    return int(best)


def nx_graph(n: int, edges) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    return G


def matching_size(n: int, edges) -> int:
    return len(nx.max_weight_matching(nx_graph(n, edges), maxcardinality=True))


def subset_degrees(n: int, edge_list) -> np.ndarray:
    """Row s holds the degree vector of the s-th edge subset (loops count 2)."""
    m = len(edge_list)
    inc = np.zeros((m, n), dtype=np.int64)
    for i, (u, v) in enumerate(edge_list):
        inc[i, u] += 1
        inc[i, v] += 1
    masks = np.arange(1 << m, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(m)) & 1
    return bits @ inc


def has_parity_factor(degs: np.ndarray, g, f) -> bool:
    """Does some edge subset (rows of ``degs``) satisfy g <= d <= f with d = f (mod 2)?"""
    g = np.asarray(g)
    f = np.asarray(f)
    ok = (degs >= g) & (degs <= f) & ((degs - f) % 2 == 0)
    return bool(ok.all(axis=1).any())


def rho_closed_form(r: int, eta: int) -> float:
    if r % 2 == 0 or eta % 2 == 0:
        return (r - 2 + math.sqrt((r + 2) ** 2 - 8 * (eta // 2))) / 2
    if eta >= 3:
        return (r - 3 + math.sqrt((r + 3) ** 2 - 4 * eta)) / 2
    roots = np.roots([1, -(r - 2), -2 * r, r - 1])
    return float(max(z.real for z in roots if abs(z.imag) < 1e-9))


def cubic(r: int, x: float) -> float:
    return x**3 - (r - 2) * x**2 - 2 * r * x + r - 1


def all_graphs_upto(n_max: int):
    """(n, edges) for every graph in the networkx atlas (all graphs on <= 7 vertices)."""
    for G in nx.graph_atlas_g():
        if 0 < G.number_of_nodes() <= n_max:
            yield G.number_of_nodes(), sorted(tuple(sorted(e)) for e in G.edges())


def graphs_on_8():
    """Every 8-vertex graph up to isomorphism, possibly with repeats.

    Each is a 7-vertex graph plus a vertex with an arbitrary neighbourhood.
    Repeats are pruned by degree sequence plus rounded spectrum; pruning can
    merge cospectral graphs with equal degree sequences, which share every
    quantity the lower-bound checks look at.
    """
    seen = set()
    nbhd = (np.arange(128)[:, None] >> np.arange(7)) & 1
    for n, edges in all_graphs_upto(7):
        if n != 7:
            continue
        stack = np.zeros((128, 8, 8))
        stack[:, :7, :7] = adjacency(7, edges)
        stack[:, 7, :7] = nbhd
        stack[:, :7, 7] = nbhd
        spectra = np.round(np.linalg.eigvalsh(stack), 6)
        degrees = np.sort(stack.sum(axis=2).astype(int), axis=1)
        for nb in range(128):
            key = (tuple(degrees[nb]), tuple(spectra[nb]))
            if key not in seen:
                seen.add(key)
                yield 8, edges + [(v, 7) for v in range(7) if nb >> v & 1]


def random_connected(rng, n: int, p: float):
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        if nx.is_connected(nx_graph(n, edges)):
            return edges

