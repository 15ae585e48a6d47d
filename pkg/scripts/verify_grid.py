"""Three-way comparison (closed forms, character-sum engine, enumeration)
over a grid of primes and degrees; prints one summary line per (p, n).

    python3 scripts/verify_grid.py --grid default --workers 4
"""

import argparse
import sys
import time
from dataclasses import dataclass, field

from sqfdensity.closed_forms import closed_density
from sqfdensity.engine import engine_density
from sqfdensity.families import FAMILY_KINDS, family_grid
from sqfdensity.oracle import default_budget, enumerate_density


@dataclass
class GridConfig:
    # prime -> degrees to check
    degrees: dict = field(default_factory=lambda: {2: range(2, 9), 3: range(2, 6), 5: range(2, 5), 7: range(2, 4)})
    families: tuple = FAMILY_KINDS
    budget: int = 0
    workers: int = 1


GRIDS = {
    "small": {2: range(2, 6), 3: range(2, 4)},
    "default": {2: range(2, 9), 3: range(2, 6), 5: range(2, 5), 7: range(2, 4)},
    "large": {2: range(2, 11), 3: range(2, 7), 5: range(2, 6), 7: range(2, 5), 11: range(2, 4)},
}


def run(cfg: GridConfig) -> int:
    budget = cfg.budget or default_budget()
    mismatches = 0
    for p, ns in cfg.degrees.items():
        for n in ns:
            t0 = time.perf_counter()
            count = 0
            for kind in cfg.families:
                for fam in family_grid(kind, p, n):
                    c = closed_density(fam, p, n)
                    e = engine_density(fam, p, n)
                    o = enumerate_density(fam, p, n, budget=budget, workers=cfg.workers)
                    count += 1
                    if not (c == e == o):
                        mismatches += 1
                        print(f"MISMATCH {fam.label()} p={p} n={n}: closed={c.values()} "
                              f"engine={e.values()} oracle={o.values()}")
            print(f"p={p:<3d} n={n:<3d} tuples={count:<4d} {time.perf_counter() - t0:7.2f}s")
    print("all equal" if not mismatches else f"{mismatches} mismatches")
    return 1 if mismatches else 0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--grid", choices=sorted(GRIDS), default="default")
    ap.add_argument("--families", help="comma-separated family names")
    ap.add_argument("--budget", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args(argv)
    cfg = GridConfig(degrees=GRIDS[args.grid], budget=args.budget, workers=args.workers)
    if args.families:
        cfg.families = tuple(args.families.split(","))
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
