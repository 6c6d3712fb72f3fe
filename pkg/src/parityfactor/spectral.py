"""Adjacency spectra, quotient matrices and the eigenvalue thresholds rho(r, eta).

Eigenvalues are computed with a cyclic Jacobi method. Each sweep visits every
index pair once, in round-robin order, so that ``n // 2`` disjoint rotations are
applied together as a single block update.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, InputError, UnsupportedInputError
from .graph import Graph, vertex_set

__all__ = [
    "EPS",
    "SpectrumResult",
    "symmetric_eigenvalues",
    "adjacency_spectrum",
    "QuotientData",
    "quotient_matrix",
    "coarsest_equitable_partition",
    "RhoThreshold",
    "rho",
    "cubic_threshold_poly",
    "largest_cubic_root",
    "check_interlacing",
]

# comparison tolerance for eigenvalue inequalities
EPS = 1e-9


@dataclass(frozen=True)
class SpectrumResult:
    eigenvalues: tuple[float, ...]  # descending
    iterations: int
    residual: float

    def __len__(self) -> int:
        return len(self.eigenvalues)

    def eigenvalue(self, k: int) -> float:
        """The k-th largest eigenvalue, 1-indexed."""
        if not 1 <= k <= len(self.eigenvalues):
            raise InputError(f"eigenvalue index {k} outside 1..{len(self.eigenvalues)}")
        return self.eigenvalues[k - 1]

    def to_json(self) -> dict:
        return {
            "eigenvalues": [float(x) for x in self.eigenvalues],
            "iterations": self.iterations,
            "residual": float(self.residual),
        }


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Rounds of disjoint index pairs covering every pair exactly once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for i in range(m // 2):
            a, b = players[i], players[m - 1 - i]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _off_norm(A: np.ndarray) -> float:
    # taken directly: ||A||_F^2 - ||diag||^2 cancels catastrophically near convergence
    off = A.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def symmetric_eigenvalues(
    matrix, tol: float | None = None, max_sweeps: int = 100
) -> SpectrumResult:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Stops once the off-diagonal Frobenius norm is at most ``tol`` (default
    ``1e-12 * n``); raises :class:`ConvergenceError` after ``max_sweeps``.
    """
    A = np.array(matrix, dtype=float, copy=True)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise InputError("expected a square matrix")
    if not np.allclose(A, A.T, rtol=0, atol=1e-12):
        raise InputError("matrix is not symmetric")
    n = A.shape[0]
    A = (A + A.T) / 2
    if tol is None:
        tol = 1e-12 * max(n, 1)
    rounds = _round_robin(n) if n > 1 else []
    sweeps = 0
    off = _off_norm(A)
    while off > tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")
        sweeps += 1
        for p, q in rounds:
            apq = A[p, q]
            active = np.abs(apq) > 1e-300
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (A[q, q] - A[p, p]) / (2.0 * apq)
            t = np.sign(theta) / (np.abs(theta) + np.hypot(theta, 1.0))
            t[theta == 0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rp, rq = A[p, :].copy(), A[q, :].copy()
            A[p, :] = c[:, None] * rp - s[:, None] * rq
            A[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = A[:, p].copy(), A[:, q].copy()
            A[:, p] = cp * c - cq * s
            A[:, q] = cp * s + cq * c
            A[p, q] = 0.0
            A[q, p] = 0.0
        off = _off_norm(A)
    eig = sorted((float(x) for x in np.diag(A)), reverse=True)
    return SpectrumResult(tuple(eig), sweeps, off)


def adjacency_spectrum(G: Graph) -> SpectrumResult:
    """Eigenvalues of the 0/1 adjacency matrix of a simple graph, descending."""
    if not G.is_simple:
        raise UnsupportedInputError("adjacency spectrum is defined here for simple graphs only")
    return symmetric_eigenvalues(G.adjacency_matrix())


# -- quotient matrices ------------------------------------------------------------


@dataclass(frozen=True)
class QuotientData:
    partition: tuple[tuple[int, ...], ...]
    matrix: np.ndarray  # entry (i, j) = |[W_i, W_j]| / |W_i|
    equitable: bool

    @property
    def sizes(self) -> np.ndarray:
        return np.array([len(b) for b in self.partition], dtype=float)

    def eigenvalues(self) -> tuple[float, ...]:
        """Eigenvalues of the quotient matrix, descending.

        ``matrix = D^-1 B`` with ``B`` symmetric, so it is similar to the
        symmetric ``D^-1/2 B D^-1/2`` and all eigenvalues are real.
        """
        root = np.sqrt(self.sizes)
        sym = self.matrix * root[:, None] / root[None, :]
        return symmetric_eigenvalues((sym + sym.T) / 2).eigenvalues

    @property
    def spectral_radius(self) -> float:
        return self.eigenvalues()[0]


def quotient_matrix(G: Graph, partition: Sequence[Sequence[int]]) -> QuotientData:
    if not G.is_simple:
        raise UnsupportedInputError("quotient matrices are defined here for simple graphs only")
    blocks = tuple(vertex_set(G, b) for b in partition)
    seen: set[int] = set()
    for b in blocks:
        if not b:
            raise InputError("partition has an empty block")
        if seen & set(b):
            raise InputError("partition blocks overlap")
        seen.update(b)
    if len(seen) != G.n:
        raise InputError("partition does not cover every vertex")
    m = len(blocks)
    member = np.zeros((G.n, m))
    for i, b in enumerate(blocks):
        member[list(b), i] = 1.0
    into = G.adjacency_matrix() @ member  # into[v, j] = neighbours of v in W_j
    counts = member.T @ into  # |[W_i, W_j]|, diagonal = 2 |E(G[W_i])|
    sizes = member.sum(axis=0)
    equitable = all(np.all(into[list(b)] == into[b[0]]) for b in blocks)
    return QuotientData(blocks, counts / sizes[:, None], bool(equitable))


def coarsest_equitable_partition(G: Graph) -> list[tuple[int, ...]]:
    """Colour refinement from the trivial partition; the result is equitable."""
    colour = [0] * G.n
    while True:
        sig = [(colour[v], tuple(sorted(Counter(colour[w] for w in G.neighbors(v)).items())))
               for v in range(G.n)]
        relabel = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [relabel[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            break
        colour = new
    blocks: dict[int, list[int]] = {}
    for v, c in enumerate(colour):
        blocks.setdefault(c, []).append(v)
    return sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0])


# -- thresholds -------------------------------------------------------------------


@dataclass(frozen=True)
class RhoThreshold:
    r: int
    eta: int
    value: float
    case_tag: str  # "even-case" | "odd-odd-case" | "cubic-case"

    def __float__(self) -> float:
        return self.value


def cubic_threshold_poly(r: int, x: float) -> float:
    """x^3 - (r-2) x^2 - 2 r x + (r-1), by Horner."""
    return ((x - (r - 2)) * x - 2 * r) * x + (r - 1)


def largest_cubic_root(r: int) -> float:
    """Largest real root of x^3 - (r-2) x^2 - 2 r x + r - 1 for odd r >= 3.

    The polynomial is increasing on [r-1, inf) and changes sign there
    (p(r-1) = r - r^2 < 0 < r - 1 = p(r)), so bisection on [r-1, r] converges
    to it; bisection runs to full double precision.
    """
    if not isinstance(r, (int, np.integer)) or r < 3 or r % 2 == 0:
        raise DomainError(f"cubic threshold needs odd r >= 3, got {r!r}")
    lo, hi = float(r - 1), float(r)
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if cubic_threshold_poly(r, mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo if abs(cubic_threshold_poly(r, lo)) < abs(cubic_threshold_poly(r, hi)) else hi


def rho(r: int, eta: int) -> RhoThreshold:
    """Spectral radius threshold rho(r, eta); equals lambda_1 of extremal_H(r, eta)."""
    for name, val in (("r", r), ("eta", eta)):
        if not isinstance(val, (int, np.integer)):
            raise DomainError(f"{name} must be an integer, got {val!r}")
    if not r > eta >= 1:
        raise DomainError(f"rho(r, eta) needs r > eta >= 1, got r={r}, eta={eta}")
    if r % 2 == 0 or eta % 2 == 0:
        k = eta // 2
        value = 0.5 * (r - 2 + math.sqrt((r + 2) ** 2 - 8 * k))
        return RhoThreshold(r, eta, value, "even-case")
    if eta >= 3:
        value = 0.5 * (r - 3 + math.sqrt((r + 3) ** 2 - 4 * eta))
        return RhoThreshold(r, eta, value, "odd-odd-case")
    return RhoThreshold(r, eta, largest_cubic_root(r), "cubic-case")


def check_interlacing(outer: Sequence[float], inner: Sequence[float], tol: float = EPS) -> bool:
    """True iff lambda_i >= mu_i >= lambda_{n-m+i} for every i (1-indexed)."""
    lam = sorted(outer, reverse=True)
    mu = sorted(inner, reverse=True)
    n, m = len(lam), len(mu)
    if m >= n:
        raise InputError(f"inner spectrum must be shorter than outer (m={m}, n={n})")
    return all(lam[i] + tol >= mu[i] >= lam[n - m + i] - tol for i in range(m))
