"""Random sweep comparing theorem verdicts with exact factor existence.

For each random connected graph and constraint, picks the best theta and
tabulates (verdict, factor exists). A guaranteed verdict without a factor
would be a counterexample; the other cells show how conservative the
sufficient conditions are.

    python scripts/soundness_sweep.py --graphs 200 --seed 3
"""

from __future__ import annotations

import argparse
import collections
import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from parityfactor import (
    DegreeConstraint,
    Graph,
    InfeasibleError,
    LovaszEnumerator,
    best_theta,
)


@dataclass
class SweepConfig:
    graphs: int = 100
    constraints_per_graph: int = 20
    n_min: int = 4
    n_max: int = 10
    p_min: float = 0.4
    p_max: float = 0.95
    seed: int = 0


def random_connected(rng: random.Random, n: int, p: float) -> Graph:
    while True:
        G = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])
        if G.is_connected():
            return G


def random_constraint(rng: random.Random, G: Graph) -> DegreeConstraint:
    """Pick theta first, then (g, f) around theta d so that some theta is admissible.

    Vertices where no pair of matching parity fits fall back to g = d mod 2, f = d,
    which usually makes theta inadmissible; those land in the no-theta row.
    """
    while True:
        den = rng.randint(2, 12)
        theta = Fraction(rng.randint(1, den - 1), den)
        g, f = [], []
        for d in G.degrees:
            pairs = [(a, b) for a in range(floor(theta * d) + 1)
                     for b in range(ceil(theta * d), d + 1) if (a - b) % 2 == 0]
            a, b = rng.choice(pairs) if pairs else (d % 2, d)
            g.append(a)
            f.append(b)
        if sum(f) % 2 == 0:
            return DegreeConstraint(tuple(g), tuple(f))


def sweep(cfg: SweepConfig) -> collections.Counter:
    rng = random.Random(cfg.seed)
    table: collections.Counter = collections.Counter()
    for _ in range(cfg.graphs):
        G = random_connected(rng, rng.randint(cfg.n_min, cfg.n_max), rng.uniform(cfg.p_min, cfg.p_max))
        enum = LovaszEnumerator(G)
        for _ in range(cfg.constraints_per_graph):
            c = random_constraint(rng, G)
            try:
                _, report = best_theta(G, c)
            except InfeasibleError:
                table[("no-theta", enum.decide(c).verdict)] += 1
                continue
            table[(report.verdict, enum.decide(c).verdict)] += 1
    return table


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--graphs", type=int, default=SweepConfig.graphs)
    ap.add_argument("--per-graph", type=int, default=SweepConfig.constraints_per_graph)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    args = ap.parse_args()
    cfg = SweepConfig(graphs=args.graphs, constraints_per_graph=args.per_graph, n_max=args.n_max, seed=args.seed)
    table = sweep(cfg)
    print(f"{'verdict':<16} {'exists':>8} {'not-exists':>11}")
    for verdict in ("guaranteed", "boundary", "not-guaranteed", "no-theta"):
        print(f"{verdict:<16} {table[(verdict, 'exists')]:>8} {table[(verdict, 'not-exists')]:>11}")
    bad = table[("guaranteed", "not-exists")]
    print("counterexamples:", bad)


if __name__ == "__main__":
    main()
