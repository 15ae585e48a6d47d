"""Command-line front end.

    sqfdensity density --family a1 --p 3 --n 3 --b1 0 --method closed
    sqfdensity verify --pmax 3 --nmax 4
    sqfdensity euler --set const --kind sqf --n 2 --bound 100000

Exit codes: 0 ok, 1 verification mismatch, 2 bad flags or parameters,
3 enumeration budget exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .closed_forms import closed_density
from .cyclotomic import NotRational
from .engine import engine_density
from .euler import KINDS, SETS, euler_constant
from .families import FAMILY_KINDS, InvalidParameters, SigmaFamily, family_grid
from .oracle import default_budget, enumerate_density
from .series import BudgetExceeded

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET, EXIT_INVARIANT = 0, 1, 2, 3, 4

DENSITY_FIELDS = ("command", "family", "p", "n", "params", "method", "p0_sqf", "p1_sqf", "p_sqf", "p_max")


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def _primes(upto):
    return [q for q in range(2, upto + 1) if all(q % r for r in range(2, int(q**0.5) + 1))]


def compute(method: str, family: SigmaFamily, p: int, n: int, budget: int | None = None):
    if method == "closed":
        return closed_density(family, p, n)
    if method == "engine":
        return engine_density(family, p, n)
    if method == "oracle":
        return enumerate_density(family, p, n, budget=budget)
    raise InvalidParameters(f"unknown method {method!r}")


def density_record(family: SigmaFamily, p: int, n: int, method: str, result) -> dict:
    rec = {
        "command": "density",
        "family": family.kind,
        "p": p,
        "n": n,
        "params": family.residues(p),
        "method": method,
    }
    rec.update({k: frac_str(v) for k, v in result.as_dict().items()})
    return rec


def _emit(records, fmt, out, extra_fields=()):
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec) + "\n")
        return
    buf = io.StringIO()
    fields = list(DENSITY_FIELDS) + list(extra_fields)
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(fields)
    for rec in records:
        row = []
        for f in fields:
            v = rec.get(f, "")
            if f == "params":
                v = ";".join(f"{k}={x}" for k, x in v.items())
            row.append(v)
        w.writerow(row)
    out.write(buf.getvalue())


def cmd_density(args, out=None) -> int:
    out = out or sys.stdout
    kw = {}
    for name in ("b1", "b2", "bn"):
        v = getattr(args, name)
        if v is not None:
            kw[name] = v
    family = SigmaFamily(args.family, **kw)
    family.validate(args.p, args.n)
    budget = args.budget if args.budget is not None else default_budget()
    t0 = time.perf_counter()
    result = compute(args.method, family, args.p, args.n, budget)
    rec = density_record(family, args.p, args.n, args.method, result)
    extra = ()
    if not args.deterministic:
        rec["timing"] = round(time.perf_counter() - t0, 6)
        extra = ("timing",)
    _emit([rec], args.format, out, extra)
    return EXIT_OK


def run_verify(pmax: int, nmax: int, budget: int | None = None, families=None, out=None,
               err=None, oracle=enumerate_density) -> int:
    """Three-way comparison on every (family, p, n, params) with p <= pmax,
    2 <= n <= nmax.  ``oracle`` is injectable for self-tests."""
    out = out or sys.stdout
    err = err or sys.stderr
    if budget is None:
        budget = default_budget()
    kinds = list(families) if families else list(FAMILY_KINDS)
    for k in kinds:
        if k not in FAMILY_KINDS:
            raise InvalidParameters(f"unknown family {k!r}")
    rows = 0
    for p in _primes(pmax):
        for n in range(2, nmax + 1):
            for kind in kinds:
                for fam in family_grid(kind, p, n):
                    c = closed_density(fam, p, n)
                    e = engine_density(fam, p, n)
                    o = oracle(fam, p, n, budget=budget)
                    row = {
                        "family": fam.kind,
                        "p": p,
                        "n": n,
                        "params": fam.residues(p),
                        "closed": [frac_str(x) for x in c.values()],
                        "engine": [frac_str(x) for x in e.values()],
                        "oracle": [frac_str(x) for x in o.values()],
                    }
                    out.write(json.dumps(row) + "\n")
                    rows += 1
                    if not (c.values() == e.values() == o.values()):
                        err.write(f"MISMATCH {fam.label()} p={p} n={n}\n")
                        for name in ("closed", "engine", "oracle"):
                            err.write(f"  {name}: {' '.join(row[name])}\n")
                        return EXIT_MISMATCH
    err.write(f"verified {rows} tuples: closed = engine = oracle\n")
    return EXIT_OK


def cmd_verify(args, out=None) -> int:
    fams = args.families.split(",") if args.families else None
    return run_verify(args.pmax, args.nmax, args.budget, fams, out=out)


def cmd_euler(args, out=None) -> int:
    out = out or sys.stdout
    r = euler_constant(args.set, args.kind, args.n, args.bound)
    rec = {
        "command": "euler",
        "set": args.set,
        "kind": args.kind,
        "n": args.n,
        "prime_bound": args.bound,
        "value": str(r.value),
        "lower": str(r.lower),
        "upper": str(r.upper),
        "factor_count": r.factor_count,
    }
    out.write(json.dumps(rec) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sqfdensity", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="densities of one family at (p, n)")
    d.add_argument("--family", required=True, choices=FAMILY_KINDS)
    d.add_argument("--p", type=int, required=True)
    d.add_argument("--n", type=int, required=True)
    d.add_argument("--b1", type=int)
    d.add_argument("--b2", type=int)
    d.add_argument("--bn", type=int)
    d.add_argument("--method", choices=("closed", "engine", "oracle"), default="closed")
    d.add_argument("--format", choices=("json", "csv"), default="json")
    d.add_argument("--budget", type=int, help="oracle cap on enumerated polynomials")
    d.add_argument("--deterministic", action="store_true", help="omit the timing field")
    d.set_defaults(func=cmd_density)

    v = sub.add_parser("verify", help="closed = engine = oracle on a grid")
    v.add_argument("--pmax", type=int, required=True)
    v.add_argument("--nmax", type=int, required=True)
    v.add_argument("--budget", type=int)
    v.add_argument("--families", help="comma-separated family names (default: all)")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("euler", help="truncated Euler product with tail interval")
    e.add_argument("--set", required=True, choices=sorted(SETS))
    e.add_argument("--kind", required=True, choices=KINDS)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--bound", type=int, required=True)
    e.set_defaults(func=cmd_euler)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return args.func(args)
    except (InvalidParameters, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotRational as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
