"""Truncated Euler products for every set and kind, degrees 2..nmax, with
their certified intervals.

    python3 scripts/euler_table.py --nmax 10 --bound 10000
"""

import argparse
import sys
import time
from dataclasses import dataclass

from sqfdensity.euler import KINDS, SETS, euler_constant


@dataclass
class EulerTableConfig:
    nmax: int = 10
    bound: int = 10**4
    digits: int = 10


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.split("\n\n")[0])
    ap.add_argument("--nmax", type=int, default=10)
    ap.add_argument("--bound", type=int, default=10**4)
    ap.add_argument("--digits", type=int, default=10)
    args = ap.parse_args(argv)
    cfg = EulerTableConfig(args.nmax, args.bound, args.digits)
    d = cfg.digits
    print(f"{'set':>8s} {'kind':>4s} {'n':>3s} {'value':>{d + 4}s} {'lower':>{d + 4}s} {'upper':>{d + 4}s}")
    t0 = time.perf_counter()
    for which in sorted(SETS):
        for kind in KINDS:
            for n in range(2, cfg.nmax + 1):
                r = euler_constant(which, kind, n, cfg.bound)
                print(f"{which:>8s} {kind:>4s} {n:3d} {float(r.value):{d + 4}.{d}f} "
                      f"{float(r.lower):{d + 4}.{d}f} {float(r.upper):{d + 4}.{d}f}")
    print(f"# primes <= {cfg.bound}, {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
