"""Type A oracle loop with per-n timings, optionally at n = 6."""

import argparse
import time

from hesslab.verify import verify_typeA


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nmax", type=int, default=5)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t0 = time.perf_counter()
    rep = verify_typeA(args.nmax, seed=args.seed, jobs=args.jobs)
    for c in rep.checks:
        print(f"{'PASS' if c.passed else 'FAIL'} {c.id:6} {c.runtime:7.2f}s  {c.name}: {c.detail}")
    print(f"total {time.perf_counter() - t0:.2f}s")
    return 0 if rep.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
