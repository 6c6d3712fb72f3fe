import math
import os
from fractions import Fraction

import hypothesis
from hypothesis import HealthCheck, assume, strategies as st

from parityfactor import DegreeConstraint, Graph

hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile(
    "thorough", max_examples=1000, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def simple_graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, chosen) if keep]
    if connected:
        # a random spanning path guarantees connectivity
        order = draw(st.permutations(range(n)))
        edges = sorted(set(edges) | {tuple(sorted(e)) for e in zip(order, order[1:])})
    return Graph.from_edges(n, edges)


@st.composite
def multigraphs(draw, max_n=5, max_edges=8):
    n = draw(st.integers(1, max_n))
    vertex = st.integers(0, n - 1)
    pairs = draw(st.lists(st.tuples(vertex, vertex), max_size=max_edges))
    return Graph.from_edges(n, pairs)


@st.composite
def constraints_for(draw, G, even_total=True):
    """Random (g, f) with g <= f <= d(v) and f - g even; optionally sum f even."""
    g, f = [], []
    for d in G.degrees:
        hi = draw(st.integers(0, d))
        lo = draw(st.sampled_from(range(hi % 2, hi + 1, 2)))
        g.append(lo)
        f.append(hi)
    if even_total and sum(f) % 2:
        # lower f by one at the first vertex where that is possible
        v = next(v for v, x in enumerate(f) if x >= 1)
        f[v] -= 1
        g[v] = f[v] % 2
    return DegreeConstraint(tuple(g), tuple(f))


def _parity_choices(d, theta, parity):
    """(g, f) pairs of the given parity with g <= theta d <= f <= d."""
    lo_f = math.ceil(theta * d)
    hi_g = math.floor(theta * d)
    fs = [x for x in range(lo_f, d + 1) if x % 2 == parity]
    gs = [x for x in range(0, hi_g + 1) if x % 2 == parity]
    return gs, fs


@st.composite
def theta_instances(draw, G):
    """(theta, c) with g <= theta d <= f everywhere and sum f even, or reject."""
    den = draw(st.integers(2, 12))
    theta = Fraction(draw(st.integers(1, den - 1)), den)
    g, f = [], []
    for d in G.degrees:
        options = [p for p in (0, 1) if all(_parity_choices(d, theta, p))]
        assume(options)
        gs, fs = _parity_choices(d, theta, draw(st.sampled_from(options)))
        g.append(draw(st.sampled_from(gs)))
        f.append(draw(st.sampled_from(fs)))
    if sum(f) % 2:
        flippable = [v for v, d in enumerate(G.degrees) if all(_parity_choices(d, theta, 1 - f[v] % 2))]
        assume(flippable)
        v = draw(st.sampled_from(flippable))
        gs, fs = _parity_choices(G.degrees[v], theta, 1 - f[v] % 2)
        g[v], f[v] = draw(st.sampled_from(gs)), draw(st.sampled_from(fs))
    return theta, DegreeConstraint(tuple(g), tuple(f))
