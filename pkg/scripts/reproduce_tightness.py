"""Build F(r, h, l) over a parameter grid and report the tightness checks.

    python scripts/reproduce_tightness.py
    python scripts/reproduce_tightness.py --grid 4,2,4 7,3,9 --json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import dataclass, field

from parityfactor import rho, verify_tightness


@dataclass
class TightnessConfig:
    grid: list[tuple[int, int, int]] = field(
        default_factory=lambda: [(4, 2, 4), (4, 2, 6), (5, 3, 5), (6, 4, 6), (5, 1, 5), (6, 3, 6)]
    )
    as_json: bool = False


def run(cfg: TightnessConfig) -> list[dict]:
    rows = []
    for r, h, l in cfg.grid:
        start = time.perf_counter()
        rep = verify_tightness(r, h, l)
        row = rep.to_json()
        row["rho"] = rho(r, h).value
        row["seconds"] = round(time.perf_counter() - start, 3)
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--grid", nargs="+", help="triples r,h,l")
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = TightnessConfig(as_json=args.json)
    if args.grid:
        cfg.grid = [tuple(int(x) for x in t.split(",")) for t in args.grid]
    rows = run(cfg)
    if cfg.as_json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'r':>3} {'h':>3} {'l':>3} {'sec':>6} {'b':>3} {'def':>5} {'rho':>14}  checks")
    for row in rows:
        p = row["params"]
        checks = " ".join(f"{c['name']}={'ok' if c['passed'] else 'FAIL'}" for c in row["checks"])
        print(f"{p['r']:>3} {p['h']:>3} {p['l']:>3} {row['seconds']:>6} {row['b']:>3} "
              f"{row['deficiency']:>5} {row['rho']:>14.10f}  {checks}")


if __name__ == "__main__":
    main()
