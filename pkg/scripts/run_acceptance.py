#!/usr/bin/env python3
"""Run the acceptance criteria outside pytest and print one line per criterion.

    python3 scripts/run_acceptance.py            # all criteria
    python3 scripts/run_acceptance.py 1 4 6      # a subset
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import criteria  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("which", nargs="*", type=int, help="criterion numbers (default: all)")
    args = ap.parse_args()
    which = args.which or sorted(criteria.CRITERIA)
    t0 = time.perf_counter()
    failed = 0
    for k in which:
        passed, detail = criteria.CRITERIA[k]()
        failed += not passed
        print(f"criterion {k}: {'PASS' if passed else 'FAIL'}  {detail}", flush=True)
    print(f"{len(which) - failed}/{len(which)} passed in {time.perf_counter() - t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
