"""Tabulate rho(r, eta) next to the spectral radius of H(r, eta).

    python scripts/threshold_table.py --r-max 9
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from parityfactor import adjacency_spectrum, extremal_H, rho


@dataclass
class TableConfig:
    r_min: int = 2
    r_max: int = 12


def rows(cfg: TableConfig):
    for r in range(cfg.r_min, cfg.r_max + 1):
        for eta in range(1, r):
            H = extremal_H(r, eta)
            t = rho(r, eta)
            lam1 = adjacency_spectrum(H).eigenvalue(1)
            yield r, eta, H.n, t.case_tag, t.value, abs(lam1 - t.value)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--r-min", type=int, default=TableConfig.r_min)
    ap.add_argument("--r-max", type=int, default=TableConfig.r_max)
    args = ap.parse_args()
    print(f"{'r':>3} {'eta':>4} {'|H|':>4} {'case':<13} {'rho':>16} {'|lambda_1 - rho|':>17}")
    for r, eta, n, case, value, err in rows(TableConfig(args.r_min, args.r_max)):
        print(f"{r:>3} {eta:>4} {n:>4} {case:<13} {value:>16.12f} {err:>17.2e}")


if __name__ == "__main__":
    main()
