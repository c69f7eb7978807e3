"""Run every theorem check suite at acceptance scale."""

import sys
import time

from tgexpress.harness import run_checks

SUITES = [("theorem1", 200, 11), ("theorem2", 1, 0), ("equivariance", 100, 0),
          ("oracle", 500, 0)]

if __name__ == "__main__":
    failed = False
    for suite, trials, seed in SUITES:
        start = time.perf_counter()
        rep = run_checks(suite, trials, seed)
        for line in rep.lines():
            print(line)
        print(f"  [{suite}: {time.perf_counter() - start:.1f}s]")
        failed |= not rep.ok
    sys.exit(3 if failed else 0)
