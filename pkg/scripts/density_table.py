"""Table of exact densities for one family over a range of primes and degrees.

    python3 scripts/density_table.py --family an-unit --primes 2,3,5,7 --nmax 8
    python3 scripts/density_table.py --family a1 --b1 0 --format csv
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from sqfdensity.cli import frac_str
from sqfdensity.closed_forms import closed_density
from sqfdensity.engine import engine_density
from sqfdensity.families import FAMILY_KINDS, InvalidParameters, SigmaFamily

COLUMNS = ("p", "n", "p0_sqf", "p1_sqf", "p_sqf", "p_max")


@dataclass
class TableConfig:
    family: SigmaFamily
    primes: tuple = (2, 3, 5, 7)
    nmin: int = 2
    nmax: int = 8
    method: str = "closed"


def rows(cfg: TableConfig):
    compute = closed_density if cfg.method == "closed" else engine_density
    for p in cfg.primes:
        for n in range(cfg.nmin, cfg.nmax + 1):
            try:
                r = compute(cfg.family, p, n)
            except InvalidParameters:
                continue  # family not defined at this (p, n)
            yield (p, n) + tuple(frac_str(v) for v in r.values())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--family", required=True, choices=FAMILY_KINDS)
    ap.add_argument("--b1", type=int)
    ap.add_argument("--b2", type=int)
    ap.add_argument("--bn", type=int)
    ap.add_argument("--primes", default="2,3,5,7")
    ap.add_argument("--nmin", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=8)
    ap.add_argument("--method", choices=("closed", "engine"), default="closed")
    ap.add_argument("--format", choices=("text", "csv"), default="text")
    args = ap.parse_args(argv)
    kw = {k: getattr(args, k) for k in ("b1", "b2", "bn") if getattr(args, k) is not None}
    cfg = TableConfig(SigmaFamily(args.family, **kw), tuple(int(x) for x in args.primes.split(",")),
                      args.nmin, args.nmax, args.method)
    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(COLUMNS)
        w.writerows(rows(cfg))
        return 0
    print(f"# {cfg.family.label()}  ({cfg.method})")
    print("".join(f"{c:>16s}" for c in COLUMNS))
    for row in rows(cfg):
        print("".join(f"{str(c):>16s}" for c in row))
    return 0


if __name__ == "__main__":
    sys.exit(main())
