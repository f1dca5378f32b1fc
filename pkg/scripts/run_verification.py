#!/usr/bin/env python3
"""Run the full verification battery and print the outcome.

Usage:
    python scripts/run_verification.py            # human-readable
    python scripts/run_verification.py --json     # machine-readable report
    python scripts/run_verification.py --suite cohomology --seed 7
"""

import argparse
import json
import sys
import time

from quintic.suites import DEFAULT_SEED, SUITE_NAMES, run_suites


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument(
        "--suite", default="all", choices=SUITE_NAMES + ("all",)
    )
    args = parser.parse_args()
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)

    start = time.perf_counter()
    report = run_suites(names, seed=args.seed)
    elapsed = time.perf_counter() - start

    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        for section in report["sections"]:
            checks = [v for v in section["details"].values() if isinstance(v, bool)]
            print(
                f"[{section['status'].upper():4s}] {section['name']:13s}"
                f" ({sum(checks)}/{len(checks)} checks)"
            )
        summary = report["summary"]
        print(
            f"suites passed: {summary['passed']}, failed: {summary['failed']}"
            f"  ({elapsed:.1f}s, seed {report['seed']})"
        )
    return 0 if report["summary"]["failed"] == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
