"""Sweep the instance verification over all coprime (p, q) up to a limit.

Usage: python scripts/verify_sweep.py [LIMIT] [MAX_K]

Exits nonzero if any configuration fails.  Larger limits raise the rotation
collar's crossing count; configurations whose collar exceeds the exact
state-sum budget are reported as failures rather than approximated.
"""

import math
import sys
import time

from torusskein.assembly import verify_theorem
from torusskein.charvariety import TorusKnotConfig


def main() -> int:
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    max_k = int(sys.argv[2]) if len(sys.argv) > 2 else 2
    failures = 0
    print(f"{'(p, q)':>8}  {'checks':>6}  {'status':>8}  {'seconds':>8}")
    for p in range(2, limit + 1):
        for q in range(p + 1, limit + 1):
            if math.gcd(p, q) != 1:
                continue
            t0 = time.perf_counter()
            report = verify_theorem(TorusKnotConfig(p, q), max_k=max_k)
            dt = time.perf_counter() - t0
            status = "ok" if report.all_passed else "FAILED"
            if not report.all_passed:
                failures += 1
            print(f"  ({p},{q})  {len(report.checks):>6}  {status:>8}  {dt:8.2f}")
            for check in report.checks:
                if not check["pass"]:
                    print(f"      {check['name']}: {check['witness']}")
    print(f"{failures} failing configuration(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
