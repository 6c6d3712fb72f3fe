"""Sufficient eigenvalue conditions for (g,f)-parity factors, and the
tightness family that shows they cannot be relaxed.

``theta`` is handled as an exact :class:`~fractions.Fraction` so that the
integer-threshold conditions (``h >= 1/theta*`` and the ceilings) are decided
exactly. Floats are snapped to the nearest fraction with denominator at most
10**6; pass a ``Fraction`` or a string such as ``"1/3"`` to avoid that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Callable

from .constructions import family_F
from .errors import DomainError, InfeasibleError, PreconditionError
from .factor import DegreeConstraint, deficiency
from .graph import Graph, edge_connectivity
from .spectral import EPS, SpectrumResult, adjacency_spectrum, rho

__all__ = [
    "GUARANTEED",
    "BOUNDARY",
    "NOT_GUARANTEED",
    "BranchRecord",
    "TheoremReport",
    "as_theta",
    "theta_feasible_interval",
    "evaluate_conditions",
    "best_theta",
    "TightnessCheck",
    "TightnessReport",
    "tightness_constraint",
    "verify_tightness",
]

GUARANTEED = "guaranteed"
BOUNDARY = "boundary"
NOT_GUARANTEED = "not-guaranteed"


def as_theta(theta) -> Fraction:
    if isinstance(theta, Fraction):
        return theta
    if isinstance(theta, (int, str)):
        return Fraction(theta)
    return Fraction(theta).limit_denominator(10**6)


@dataclass(frozen=True)
class BranchRecord:
    branch: str  # a | b | c | d | e
    applicable: bool
    sub: str  # i | ii | none
    eigen_index: int | None
    threshold: float | None
    measured: float | None
    verdict: str
    note: str = ""

    def to_json(self) -> dict:
        return {
            "branch": self.branch,
            "applicable": self.applicable,
            "sub": self.sub,
            "eigen_index": self.eigen_index,
            "threshold": self.threshold,
            "measured": self.measured,
            "verdict": self.verdict,
            "note": self.note,
        }


@dataclass(frozen=True)
class TheoremReport:
    sum_f_even: bool
    theta: Fraction
    theta_star: Fraction
    h: int
    h_e: int
    h_o: int
    min_degree: int
    branches: tuple[BranchRecord, ...]

    @property
    def verdict(self) -> str:
        verdicts = {b.verdict for b in self.branches}
        for v in (GUARANTEED, BOUNDARY):
            if v in verdicts:
                return v
        return NOT_GUARANTEED

    def branch(self, name: str) -> BranchRecord:
        return next(b for b in self.branches if b.branch == name)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "sum_f_even": self.sum_f_even,
            "theta": float(self.theta),
            "theta_exact": str(self.theta),
            "theta_star": float(self.theta_star),
            "h": self.h,
            "h_e": self.h_e,
            "h_o": self.h_o,
            "min_degree": self.min_degree,
            "branches": [b.to_json() for b in self.branches],
        }


def theta_feasible_interval(G: Graph, c: DegreeConstraint) -> tuple[Fraction, Fraction]:
    """``[max g/d, min f/d]`` clipped to ``[0, 1]``; the endpoints 0 and 1 themselves
    are never admissible values of theta."""
    c.check_graph(G)
    lo, hi = Fraction(0), Fraction(1)
    for v, d in enumerate(G.degrees):
        if d == 0:
            if c.g[v] > 0:
                raise InfeasibleError(f"vertex {v} has degree 0 but g({v}) = {c.g[v]}")
            continue
        lo = max(lo, Fraction(c.g[v], d))
        hi = min(hi, Fraction(c.f[v], d))
    if lo > hi or lo >= 1 or hi <= 0:
        raise InfeasibleError(f"no theta in (0, 1) with g <= theta d <= f (bounds {lo}, {hi})")
    return lo, hi


def _in_interval(theta: Fraction, lo: Fraction, hi: Fraction) -> bool:
    return 0 < theta < 1 and lo <= theta <= hi


def _eigen_branch(
    name: str,
    hh: int,
    t: Fraction,
    delta: int,
    n: int,
    spectrum: Callable[[], SpectrumResult],
) -> BranchRecord:
    """Sub-branch i (hh >= 1/t) or ii (hh < 1/t <= delta and an eigenvalue test)."""
    inv = 1 / t
    if hh >= inv:
        return BranchRecord(name, True, "i", None, None, None, GUARANTEED)
    if inv > delta:
        return BranchRecord(name, True, "none", None, None, None, NOT_GUARANTEED,
                            "h < 1/t but 1/t exceeds the minimum degree")
    k = ceil(2 / (1 - t * hh))
    threshold = rho(delta, ceil(inv) - 1).value
    if k > n:
        return BranchRecord(name, True, "ii", k, threshold, None, NOT_GUARANTEED,
                            f"eigenvalue index {k} exceeds vertex count {n}")
    lam = spectrum().eigenvalue(k)
    if lam < threshold - EPS:
        verdict = GUARANTEED
    elif abs(lam - threshold) <= EPS:
        verdict = BOUNDARY
    else:
        verdict = NOT_GUARANTEED
    return BranchRecord(name, True, "ii", k, threshold, lam, verdict)


def evaluate_conditions(
    G: Graph,
    c: DegreeConstraint,
    theta,
    h: int | None = None,
    *,
    spectrum: SpectrumResult | None = None,
    connectivity: int | None = None,
) -> TheoremReport:
    """Evaluate branches (a)-(e) for one theta.

    ``h`` defaults to the edge connectivity of ``G``; any smaller positive value
    is also a valid hypothesis. ``spectrum`` and ``connectivity`` may be passed
    to reuse earlier computations.
    """
    c.check_graph(G)
    if not G.is_simple:
        raise PreconditionError("graph must be simple")
    if G.n < 2 or not G.is_connected():
        raise PreconditionError("graph must be connected with at least 2 vertices")
    if not c.sum_f_even:
        raise PreconditionError("sum of f over all vertices is odd")
    theta = as_theta(theta)
    try:
        lo, hi = theta_feasible_interval(G, c)
    except InfeasibleError as exc:
        raise PreconditionError(str(exc)) from None
    if not _in_interval(theta, lo, hi):
        raise PreconditionError(f"theta = {theta} violates g <= theta d <= f or 0 < theta < 1")
    kappa = edge_connectivity(G) if connectivity is None else connectivity
    if h is None:
        h = kappa
    if not 1 <= h <= kappa:
        raise PreconditionError(f"graph is {kappa}-edge-connected, cannot assume h = {h}")

    h_e, h_o = (h, h + 1) if h % 2 == 0 else (h + 1, h)
    theta_star = min(theta, 1 - theta)
    delta = G.min_degree
    deg = G.degrees
    cache: list[SpectrumResult] = [spectrum] if spectrum is not None else []

    def lazy_spectrum() -> SpectrumResult:
        if not cache:
            cache.append(adjacency_spectrum(G))
        return cache[0]

    def skipped(name: str, why: str) -> BranchRecord:
        return BranchRecord(name, False, "none", None, None, None, NOT_GUARANTEED, why)

    d_even = all(d % 2 == 0 for d in deg)
    f_even = all(x % 2 == 0 for x in c.f)
    df_same = all((d - x) % 2 == 0 for d, x in zip(deg, c.f))
    branches = [_eigen_branch("a", h, theta_star, delta, G.n, lazy_spectrum)]
    if d_even and f_even:
        branches.append(BranchRecord("b", True, "none", None, None, None, GUARANTEED))
    else:
        branches.append(skipped("b", "needs every degree and every f(v) even"))
    branches.append(_eigen_branch("c", h_e, theta_star, delta, G.n, lazy_spectrum) if d_even
                    else skipped("c", "needs every degree even"))
    branches.append(_eigen_branch("d", h_o, 1 - theta, delta, G.n, lazy_spectrum) if f_even
                    else skipped("d", "needs every f(v) even"))
    branches.append(_eigen_branch("e", h_o, theta, delta, G.n, lazy_spectrum) if df_same
                    else skipped("e", "needs d(v) = f(v) mod 2 everywhere"))
    return TheoremReport(c.sum_f_even, theta, theta_star, h, h_e, h_o, delta, tuple(branches))


def _breakpoints(n: int, delta: int, hs: set[int]) -> set[Fraction]:
    """theta values where some ceiling used by a branch changes value."""
    points: set[Fraction] = set()
    for m in range(1, delta + 2):
        points.update({Fraction(1, m), 1 - Fraction(1, m)})
    for m in range(1, n + 2):
        for hh in hs:
            x = (1 - Fraction(2, m)) / hh
            points.update({x, 1 - x})
    return points


def best_theta(G: Graph, c: DegreeConstraint, h: int | None = None) -> tuple[Fraction, TheoremReport]:
    """Search theta over a finite set that meets every piece of the piecewise
    constant branch conditions; return the first guaranteed theta, else the
    feasible theta closest to 1/2."""
    lo, hi = theta_feasible_interval(G, c)
    kappa = edge_connectivity(G) if G.n >= 2 else 0
    hh = kappa if h is None else h
    spectrum = adjacency_spectrum(G) if G.is_simple else None
    half = min(max(Fraction(1, 2), lo), hi)

    points = {p for p in _breakpoints(G.n, G.min_degree, {hh, hh + 1}) if lo <= p <= hi}
    points.update({lo, hi})
    ordered = sorted(points)
    mids = {(a + b) / 2 for a, b in zip(ordered, ordered[1:])}
    rest = sorted((points | mids) - {half, lo, hi})
    candidates = [half, lo, hi] + rest

    first: tuple[Fraction, TheoremReport] | None = None
    for theta in candidates:
        if not (0 < theta < 1):
            continue
        report = evaluate_conditions(G, c, theta, h, spectrum=spectrum, connectivity=kappa)
        if first is None:
            first = (theta, report)
        if report.verdict == GUARANTEED:
            return theta, report
    if first is None:
        raise InfeasibleError("no admissible theta strictly between 0 and 1")
    return first


# -- tightness ------------------------------------------------------------------------


@dataclass(frozen=True)
class TightnessCheck:
    name: str
    passed: bool
    measured: object
    expected: object


@dataclass
class TightnessReport:
    params: tuple[int, int, int]
    b: int
    deficiency: int
    checks: list[TightnessCheck] = field(default_factory=list)
    marginal_theta_ok: bool = False

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def to_json(self) -> dict:
        r, h, l = self.params
        return {
            "params": {"r": r, "h": h, "l": l},
            "passed": self.passed,
            "b": self.b,
            "deficiency": self.deficiency,
            "marginal_theta_ok": self.marginal_theta_ok,
            "checks": [
                {"name": ch.name, "passed": ch.passed, "measured": ch.measured, "expected": ch.expected}
                for ch in self.checks
            ],
        }


def _largest_odd_below(x: Fraction) -> int:
    b = ceil(x) - 1
    if b % 2 == 0:
        b -= 1
    return b


def tightness_constraint(r: int, h: int, l: int, U, copies) -> tuple[DegreeConstraint, int]:
    """Canonical (g, f) = (f, f) with f = b on U and odd f-sum on every copy.

    Off U, f is 1; when a copy has an even number of vertices its lowest-id
    vertex gets f = 2 instead so the copy's sum stays odd.
    """
    b = _largest_odd_below(Fraction(l, h))
    n = len(U) + sum(len(C) for C in copies)
    f = [1] * n
    for w in U:
        f[w] = b
    for C in copies:
        if len(C) % 2 == 0:
            f[C[0]] = 2
    return DegreeConstraint(tuple(f), tuple(f)), b


def verify_tightness(r: int, h: int, l: int) -> TightnessReport:
    """Build F(r, h, l) and check min degree, edge connectivity, the repeated
    eigenvalue rho(r, h) at positions h+1..l, and the (U, {}) deficiency."""
    if not all(isinstance(x, int) for x in (r, h, l)) or not l >= r > h >= 1:
        raise DomainError(f"tightness needs l >= r > h >= 1, got r={r}, h={h}, l={l}")
    inst = family_F(r, h, l)
    F = inst.graph
    target = rho(r, h).value
    eig = adjacency_spectrum(F)
    window = [eig.eigenvalue(i) for i in range(h + 1, l + 1)]
    worst = max(abs(x - target) for x in window)
    c, b = tightness_constraint(r, h, l, inst.U, inst.copies)
    d = deficiency(F, c, inst.U, ())
    kappa = edge_connectivity(F)
    report = TightnessReport((r, h, l), b, d)
    report.checks = [
        TightnessCheck("min-degree", F.min_degree == r, F.min_degree, r),
        TightnessCheck("edge-connectivity", kappa == h, kappa, h),
        TightnessCheck("eigenvalues", worst <= 1e-8, worst, target),
        TightnessCheck("deficiency", d == b * h - l and d < 0, d, b * h - l),
    ]
    # with theta = 1/(h+1): ceil(1/theta) - 1 = h and l >= 2h/(1 - theta h) = 2h(h+1)
    report.marginal_theta_ok = l >= 2 * h * (h + 1)
    return report
