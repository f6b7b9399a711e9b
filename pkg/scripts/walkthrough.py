"""Step-by-step centralizer run on a = x^2 + x*y (or any polynomial).

Prints each step's case, residual leading term and floor, then the final
status, b and the first terms of the conjugator e.

    python scripts/walkthrough.py "x^2 + x*y" --budget 50 --floor -10
"""

import argparse
import sys
import time

from ncdegree.mnseries import GroupSeries, centralize
from ncdegree.parsing import parse_poly
from ncdegree.words import OrderConfig, group_compare


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("a", nargs="?", default="x^2 + x*y")
    ap.add_argument("--budget", type=int, default=50)
    ap.add_argument("--floor", type=int, default=-10)
    args = ap.parse_args(argv)
    cfg = OrderConfig(2)
    a = GroupSeries.from_poly(parse_poly(args.a), args.floor, cfg)

    start = time.perf_counter()
    res = centralize(a, args.budget)
    elapsed = time.perf_counter() - start
    for s in res.steps:
        d = s.to_dict()
        print(f"step {d['step']:>3}  case {d['case']}  lead {d['residual_lead']:<20} "
              f"coeff {d['residual_coefficient']:>5}  -> {d['next_lead']}")
    leads = [s.lead for s in res.steps]
    decreasing = all(group_compare(t, s, cfg) < 0 for s, t in zip(leads, leads[1:]))
    print(f"status: {res.status}" + (f" ({res.reason})" if res.reason else "") + f" in {elapsed:.3f}s")
    print(f"residual leads strictly decreasing: {decreasing}")
    print(f"b = {res.b}")
    print(f"e = {res.e.format(limit=6)}  [{len(res.e)} terms]")
    if not res.complete:
        print(f"residual = {res.residual.format(limit=3)}")
    return 0 if res.complete else 1


if __name__ == "__main__":
    sys.exit(main())
