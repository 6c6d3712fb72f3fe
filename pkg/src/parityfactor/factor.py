"""Deciding, finding and certifying (g,f)-parity factors.

Two independent routes are provided:

* :func:`decide_bruteforce` evaluates the Lovasz deficiency
  ``d(T) - g(T) + f(S) - |[S,T]| - q(S,T)`` over all disjoint pairs ``(S, T)``.
* :func:`find_parity_factor` attaches ``(f-g)/2`` loops per vertex, turns the
  resulting f-factor problem into a perfect matching problem on a gadget graph
  and solves it with the blossom algorithm.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InfeasibleError, InputError, LimitError, ParseError
from .graph import Graph, components, cut_size, vertex_set
from .matching import mate_array

__all__ = [
    "DEFAULT_LIMIT",
    "DegreeConstraint",
    "Violation",
    "FactorCertificate",
    "Gadget",
    "q_count",
    "deficiency",
    "LovaszEnumerator",
    "decide_bruteforce",
    "attach_parity_loops",
    "gadget_reduce",
    "find_parity_factor",
    "verify_factor",
    "parse_constraints",
]

DEFAULT_LIMIT = 15


@dataclass(frozen=True)
class DegreeConstraint:
    g: tuple[int, ...]
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "g", tuple(int(x) for x in self.g))
        object.__setattr__(self, "f", tuple(int(x) for x in self.f))
        if len(self.g) != len(self.f):
            raise InputError("g and f have different lengths")
        for v, (a, b) in enumerate(zip(self.g, self.f)):
            if a < 0 or b < 0:
                raise InputError(f"negative bound at vertex {v}")
            if a > b:
                raise InputError(f"g({v})={a} exceeds f({v})={b}")
            if (b - a) % 2:
                raise InputError(f"g({v})={a} and f({v})={b} differ in parity")

    @classmethod
    def uniform(cls, n: int, g: int, f: int) -> DegreeConstraint:
        return cls((g,) * n, (f,) * n)

    @property
    def n(self) -> int:
        return len(self.f)

    @property
    def sum_f_even(self) -> bool:
        return sum(self.f) % 2 == 0

    def check_graph(self, G: Graph) -> None:
        if self.n != G.n:
            raise InputError(f"constraint covers {self.n} vertices, graph has {G.n}")

    def to_json(self) -> dict:
        return {"g": list(self.g), "f": list(self.f)}


@dataclass(frozen=True)
class Violation:
    S: tuple[int, ...]
    T: tuple[int, ...]
    deficiency: int

    def to_json(self) -> dict:
        return {"S": list(self.S), "T": list(self.T), "deficiency": self.deficiency}


@dataclass(frozen=True)
class FactorCertificate:
    verdict: str  # "exists" | "not-exists" | "unknown"
    factor: tuple[tuple[int, int], ...] | None = None
    violation: Violation | None = None

    def to_json(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.factor is not None:
            out["factor"] = [list(e) for e in self.factor]
        if self.violation is not None:
            out["violation"] = self.violation.to_json()
        return out


# -- Lovasz deficiency -------------------------------------------------------------


def q_count(G: Graph, f: Sequence[int], T: Iterable[int], removed: Iterable[int]) -> int:
    """Components C of G - removed with f(V(C)) + |[T, V(C)]| odd."""
    T_ = vertex_set(G, T)
    R = vertex_set(G, removed)
    if not set(T_) <= set(R):
        raise InputError("T must be contained in the removed set")
    q = 0
    for C in components(G, R):
        if (sum(f[v] for v in C) + cut_size(G, T_, C)) % 2:
            q += 1
    return q


def deficiency(G: Graph, c: DegreeConstraint, S: Iterable[int], T: Iterable[int]) -> int:
    """d(T) - g(T) + f(S) - |[S,T]| - q(S,T) for disjoint S, T."""
    c.check_graph(G)
    S_, T_ = vertex_set(G, S), vertex_set(G, T)
    if set(S_) & set(T_):
        raise InputError("S and T must be disjoint")
    deg = G.degrees
    value = sum(deg[v] - c.g[v] for v in T_) + sum(c.f[v] for v in S_)
    value -= cut_size(G, S_, T_)
    value -= q_count(G, c.f, T_, S_ + T_)
    return value


@dataclass
class _PairTable:
    """Constraint-independent data for a batch of disjoint pairs (S, T).

    The deficiency of row i is ``base[i] - T[i] @ g + S[i] @ f - q[i]`` where
    ``q`` sums, over the component entries of row i, the parity of
    ``f(C) + |[T, C]|``.
    """

    S: np.ndarray
    T: np.ndarray
    base: np.ndarray
    entry_pair: np.ndarray
    entry_comp: np.ndarray
    entry_tpar: np.ndarray
    comp_ind: np.ndarray

    def deficiencies(self, g: np.ndarray, f: np.ndarray) -> np.ndarray:
        comp_par = (self.comp_ind @ f) & 1
        odd = (comp_par[self.entry_comp] + self.entry_tpar) & 1
        q = np.bincount(self.entry_pair, weights=odd, minlength=len(self.base)).astype(np.int64)
        return self.base - self.T @ g + self.S @ f - q


def _component_masks(nbr: list[int], alive: int) -> list[int]:
    out = []
    while alive:
        low = alive & -alive
        comp = frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = nbr[v] & alive & ~comp
            comp |= new
            frontier |= new
        out.append(comp)
        alive &= ~comp
    return out


def _pair_tables(G: Graph, chunk_rows: int = 1 << 17) -> Iterator[_PairTable]:
    n = G.n
    W = G.weight_matrix()
    deg = np.array(G.degrees, dtype=np.int64)
    nbr = [sum(1 << w for w in G.neighbors(v)) for v in range(n)]
    full = (1 << n) - 1
    comp_index: dict[int, int] = {}
    buf: dict[str, list] = {k: [] for k in ("S", "T", "base", "ep", "ec", "et")}
    rows = 0

    def flush() -> _PairTable:
        ind = np.zeros((len(comp_index), n), dtype=np.int64)
        for mask, i in comp_index.items():
            ind[i] = [(mask >> v) & 1 for v in range(n)]
        cat = lambda k, dt: np.concatenate(buf[k]).astype(dt) if buf[k] else np.zeros(0, dt)
        table = _PairTable(
            S=np.vstack(buf["S"]),
            T=np.vstack(buf["T"]),
            base=cat("base", np.int64),
            entry_pair=cat("ep", np.int32),
            entry_comp=cat("ec", np.int32),
            entry_tpar=cat("et", np.int8),
            comp_ind=ind,
        )
        return table

    for R in range(1 << n):
        rv = [v for v in range(n) if (R >> v) & 1]
        k = len(rv)
        bits = ((np.arange(1 << k)[:, None] >> np.arange(k)) & 1).astype(np.int64)
        Tm = np.zeros((1 << k, n), dtype=np.int8)
        Sm = np.zeros((1 << k, n), dtype=np.int8)
        Tm[:, rv] = bits
        Sm[:, rv] = 1 - bits
        Wr = W[np.ix_(rv, rv)]
        cut = ((1 - bits) * (bits @ Wr)).sum(axis=1)
        buf["S"].append(Sm)
        buf["T"].append(Tm)
        buf["base"].append(bits @ deg[rv] - cut)
        for C in _component_masks(nbr, full & ~R):
            cid = comp_index.setdefault(C, len(comp_index))
            cv = [v for v in range(n) if (C >> v) & 1]
            to_c = W[np.ix_(rv, cv)].sum(axis=1)
            buf["ep"].append(rows + np.arange(1 << k))
            buf["ec"].append(np.full(1 << k, cid))
            buf["et"].append((bits @ to_c) & 1)
        rows += 1 << k
        if rows >= chunk_rows:
            yield flush()
            comp_index = {}
            buf = {key: [] for key in buf}
            rows = 0
    if rows:
        yield flush()


def _pair_key(S_row: np.ndarray, T_row: np.ndarray) -> tuple:
    S = tuple(int(v) for v in np.flatnonzero(S_row))
    T = tuple(int(v) for v in np.flatnonzero(T_row))
    return (len(S) + len(T), S, T)


class LovaszEnumerator:
    """Exhaustive deficiency evaluation for one graph, reusable across constraints.

    Pair tables are built once and kept in memory when ``keep`` is true
    (default for graphs on at most 12 vertices), otherwise streamed per query.
    """

    def __init__(self, G: Graph, limit: int = DEFAULT_LIMIT, keep: bool | None = None):
        if G.n > limit:
            raise LimitError(f"brute force limited to {limit} vertices, graph has {G.n}")
        self.G = G
        if keep is None:
            keep = G.n <= 12
        self._kept = tuple(_pair_tables(G)) if keep else None

    def _tables(self) -> Iterable[_PairTable]:
        return self._kept if self._kept is not None else _pair_tables(self.G)

    def _arrays(self, c: DegreeConstraint) -> tuple[np.ndarray, np.ndarray]:
        c.check_graph(self.G)
        return np.array(c.g, dtype=np.int64), np.array(c.f, dtype=np.int64)

    def min_deficiency(self, c: DegreeConstraint) -> int:
        g, f = self._arrays(c)
        return min(int(t.deficiencies(g, f).min()) for t in self._tables())

    def decide(self, c: DegreeConstraint) -> FactorCertificate:
        g, f = self._arrays(c)
        best: tuple | None = None
        for table in self._tables():
            d = table.deficiencies(g, f)
            low = int(d.min())
            if low >= 0 or (best is not None and low > best[0]):
                continue
            key = min(_pair_key(table.S[i], table.T[i]) for i in np.flatnonzero(d == low))
            if best is None or (low, key) < best:
                best = (low, key)
        if best is None:
            return FactorCertificate("exists")
        low, (_, S, T) = best
        return FactorCertificate("not-exists", violation=Violation(S, T, low))


@lru_cache(maxsize=128)
def _small_enumerator(G: Graph) -> LovaszEnumerator:
    return LovaszEnumerator(G, limit=G.n, keep=True)


def decide_bruteforce(G: Graph, c: DegreeConstraint, limit: int = DEFAULT_LIMIT) -> FactorCertificate:
    """Decide existence by enumerating all 3^n disjoint pairs (S, T).

    On failure the violation is the minimum-deficiency pair, ties broken by
    ``(|S| + |T|, sorted S, sorted T)``.
    """
    c.check_graph(G)
    if G.n > limit:
        raise LimitError(f"brute force limited to {limit} vertices, graph has {G.n}")
    enum = _small_enumerator(G) if G.n <= 9 else LovaszEnumerator(G, limit=limit)
    return enum.decide(c)


# -- matching route --------------------------------------------------------------


def attach_parity_loops(G: Graph, c: DegreeConstraint) -> tuple[Graph, tuple[int, ...]]:
    """G with (f(v) - g(v)) / 2 extra loops at each v, and the target f."""
    c.check_graph(G)
    loops = dict(G.loop_map)
    for v in range(G.n):
        diff = c.f[v] - c.g[v]
        if diff % 2:
            raise InputError(f"g({v}) and f({v}) differ in parity")
        if diff:
            loops[v] = loops.get(v, 0) + diff // 2
    return Graph(G.n, G.edges, tuple(sorted(loops.items()))), c.f


@dataclass(frozen=True)
class Gadget:
    """Simple graph whose perfect matchings correspond to f-factors.

    ``links[i] = (a, b, u, v)``: gadget nodes ``a`` (stub of u) and ``b``
    (stub of v) represent one copy of edge uv, or one loop when ``u == v``.
    """

    graph: Graph
    owner: tuple[int, ...]
    links: tuple[tuple[int, int, int, int], ...]
    stub_count: int


def gadget_reduce(G: Graph, f: Sequence[int]) -> Gadget:
    """Each vertex v becomes d(v) stubs plus d(v) - f(v) cores joined to all its stubs."""
    deg = G.degrees
    for v in range(G.n):
        if f[v] < 0:
            raise InputError(f"negative target at vertex {v}")
        if f[v] > deg[v]:
            raise InfeasibleError(f"f({v})={f[v]} exceeds degree {deg[v]}")
    stubs: list[list[int]] = [[] for _ in range(G.n)]
    owner: list[int] = []

    def new_stub(v: int) -> int:
        owner.append(v)
        stubs[v].append(len(owner) - 1)
        return len(owner) - 1

    pairs: list[tuple[int, int]] = []
    links = []
    for u, v in G.edge_list():
        a, b = new_stub(u), new_stub(v)
        pairs.append((a, b))
        links.append((a, b, u, v))
    n_stubs = len(owner)
    for v in range(G.n):
        for _ in range(deg[v] - f[v]):
            core = len(owner)
            owner.append(v)
            pairs.extend((core, s) for s in stubs[v])
    return Gadget(Graph.from_edges(len(owner), pairs), tuple(owner), tuple(links), n_stubs)


def _matching_factor(G: Graph, c: DegreeConstraint) -> tuple[tuple[int, int], ...] | None:
    if any(c.g[v] > G.degrees[v] for v in range(G.n)):
        return None
    G2, f = attach_parity_loops(G, c)
    gad = gadget_reduce(G2, f)
    H = gad.graph
    adj = [list(H.neighbors(v)) for v in range(H.n)]
    mate = mate_array(H.n, adj)
    if any(m == -1 for m in mate):
        return None
    chosen = [(u, v) for a, b, u, v in gad.links if mate[a] == b]
    # loops used beyond the added ones are genuine loops of G
    added = [(c.f[v] - c.g[v]) // 2 for v in range(G.n)]
    used_loops = [0] * G.n
    factor = []
    for u, v in chosen:
        if u == v:
            used_loops[v] += 1
        else:
            factor.append((u, v))
    for v in range(G.n):
        factor.extend([(v, v)] * max(0, used_loops[v] - added[v]))
    return tuple(sorted(factor))


def find_parity_factor(G: Graph, c: DegreeConstraint, limit: int = DEFAULT_LIMIT) -> FactorCertificate:
    """Find a (g,f)-parity factor via loops + gadget + blossom matching.

    When none exists and ``G.n <= limit`` the brute-force violating pair is
    attached; above the limit the certificate carries no witness.
    """
    c.check_graph(G)
    factor = _matching_factor(G, c)
    if factor is not None:
        if not verify_factor(G, c, factor):
            raise RuntimeError("matching route produced an invalid factor")
        return FactorCertificate("exists", factor=factor)
    if G.n > limit:
        return FactorCertificate("not-exists")
    cert = decide_bruteforce(G, c, limit)
    if cert.verdict != "not-exists":
        raise RuntimeError("matching and Lovasz criterion disagree")
    return cert


def verify_factor(G: Graph, c: DegreeConstraint, F: Iterable[Sequence[int]]) -> bool:
    """Check that ``F`` (edge multiset, loops as (v, v)) is a (g,f)-parity factor."""
    c.check_graph(G)
    avail: dict[tuple[int, int], int] = {(u, v): m for u, v, m in G.edges}
    avail.update({(v, v): k for v, k in G.loops})
    used: dict[tuple[int, int], int] = {}
    deg = [0] * G.n
    for e in F:
        u, v = sorted((int(e[0]), int(e[1])))
        used[(u, v)] = used.get((u, v), 0) + 1
        if used[(u, v)] > avail.get((u, v), 0):
            raise InputError(f"edge ({u}, {v}) used more often than it occurs in G")
        deg[u] += 1
        deg[v] += 1
    return all(
        c.g[v] <= deg[v] <= c.f[v] and (deg[v] - c.f[v]) % 2 == 0 for v in range(G.n)
    )


# -- constraint files -------------------------------------------------------------


def parse_constraints(text: str, n: int) -> DegreeConstraint:
    """Read ``v <id> <g> <f>`` / ``all <g> <f>`` lines, or JSON ``{"g": [...], "f": [...]}``."""
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            g, f = list(data["g"]), list(data["f"])
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad constraint JSON: {exc}") from None
        if len(g) != n or len(f) != n:
            raise ParseError(f"constraint JSON must list {n} values for g and f")
        return DegreeConstraint(tuple(g), tuple(f))
    g: list[int | None] = [None] * n
    f: list[int | None] = [None] * n
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            nums = [int(t) for t in tok[1:]]
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", lineno) from None
        if tok[0] == "all" and len(nums) == 2:
            g = [nums[0]] * n
            f = [nums[1]] * n
        elif tok[0] == "v" and len(nums) == 3:
            v = nums[0]
            if not 0 <= v < n:
                raise ParseError(f"vertex {v} out of range", lineno)
            g[v], f[v] = nums[1], nums[2]
        else:
            raise ParseError(f"unrecognised constraint line {line!r}", lineno)
    missing = [v for v in range(n) if g[v] is None]
    if missing:
        raise ParseError(f"no constraint for vertices {missing[:5]}")
    try:
        return DegreeConstraint(tuple(g), tuple(f))  # type: ignore[arg-type]
    except InputError as exc:
        raise ParseError(str(exc)) from None
