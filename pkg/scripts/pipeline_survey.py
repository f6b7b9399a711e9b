"""Replay the constructive proof on seeded random instances and tally statuses.

For every completed trace the chain deg P(f,g) >= deg R >= deg u >= bound and
the peeling bound are checked; the script reports how often truncation was
insufficient and why.

    python scripts/pipeline_survey.py --count 100 --seed 0
"""

import argparse
import collections
import sys
import time

from ncdegree.estimate import CAMPAIGN_FIELDS, InstanceConfig, pipeline_trace, random_instance


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--budget-centralize", type=int, default=50)
    args = ap.parse_args(argv)

    start = time.perf_counter()
    statuses = collections.Counter()
    reasons = collections.Counter()
    failures = []
    slack_chain = collections.Counter()
    for i in range(args.count):
        F = CAMPAIGN_FIELDS[i % len(CAMPAIGN_FIELDS)]
        P, f, g = random_instance(InstanceConfig(field=F), args.seed + i)
        t = pipeline_trace(P, f, g, budget_centralize=args.budget_centralize)
        statuses[t.status] += 1
        if t.complete:
            if not all(t.checks.values()):
                failures.append((args.seed + i, {k: v for k, v in t.checks.items() if not v}))
            lhs, R, u, bound = t.chain()
            slack_chain["lhs = deg R" if lhs == R else "lhs > deg R"] += 1
            slack_chain["deg u = bound" if u == bound else "deg u > bound"] += 1
        else:
            reasons[t.detail.split(" (")[0]] += 1
    elapsed = time.perf_counter() - start
    print(f"{args.count} instances in {elapsed:.1f}s")
    for k, v in sorted(statuses.items()):
        print(f"  {k:<26} {v}")
    for k, v in sorted(reasons.items()):
        print(f"    because {k:<20} {v}")
    for k, v in sorted(slack_chain.items()):
        print(f"  {k:<26} {v}")
    print(f"chain/peel check failures: {len(failures)}")
    for seed, bad in failures[:10]:
        print(f"  seed {seed}: {bad}")
    return 0 if not failures else 1


if __name__ == "__main__":
    sys.exit(main())
