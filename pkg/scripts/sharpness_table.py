"""Sharpness family f = x^n, g = x^m + y, P = [x,y]^k: lhs, bound and k(n+1).

    python scripts/sharpness_table.py --n-max 5 --m-max 5 --k-max 3 --fields q,gf:2
"""

import argparse
import sys
import time

from ncdegree.estimate import sharpness_table
from ncdegree.fields import field_from_tag


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=5)
    ap.add_argument("--k-max", type=int, default=3)
    ap.add_argument("--fields", default="q,gf:2")
    args = ap.parse_args(argv)
    fields = tuple(field_from_tag(t) for t in args.fields.split(","))

    start = time.perf_counter()
    rows = sharpness_table(range(2, args.n_max + 1), range(2, args.m_max + 1), range(1, args.k_max + 1), fields)
    elapsed = time.perf_counter() - start
    print(f"{'field':>5} {'n':>2} {'m':>2} {'k':>2} {'lhs':>4} {'bound':>6} {'k(n+1)':>6} {'hyp':>4}")
    sharp = 0
    for r in rows:
        ok = r["lhs"] == r["bound"] == r["expected"]
        sharp += ok
        hyp = "yes" if r["report"].hypothesis.all_satisfied else "no"
        print(f"{r['field']:>5} {r['n']:>2} {r['m']:>2} {r['k']:>2} {r['lhs']:>4} {str(r['bound']):>6} "
              f"{r['expected']:>6} {hyp:>4}" + ("" if ok else "  NOT SHARP"))
    print(f"{sharp}/{len(rows)} cells sharp in {elapsed:.2f}s")
    return 0 if sharp == len(rows) else 1


if __name__ == "__main__":
    sys.exit(main())
