#!/usr/bin/env python3
"""Run every registered scenario and print its full report.

Exits 0 when every scenario passes, 1 otherwise, so this doubles as a
desk-scale smoke check:

    python3 scripts/run_all_examples.py
    python3 scripts/run_all_examples.py --seed 3 --only 2.2 3.5
"""

import argparse
import sys
import time

from conseq.scenarios import run_scenario, scenario_ids


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="base random seed")
    parser.add_argument(
        "--trials",
        type=int,
        default=None,
        help="override every scenario's trial count",
    )
    parser.add_argument(
        "--only",
        nargs="*",
        default=None,
        help="run just these scenario ids",
    )
    args = parser.parse_args()

    chosen = args.only if args.only else scenario_ids()
    failed = []
    for scenario_id in chosen:
        started = time.perf_counter()
        report = run_scenario(scenario_id, seed=args.seed, trials=args.trials)
        elapsed = time.perf_counter() - started
        print(f"=== {scenario_id} ({elapsed:.2f}s) ===")
        print(report.render())
        print()
        if not report.passed:
            failed.append(scenario_id)

    if failed:
        print(f"FAILED scenarios: {', '.join(failed)}", file=sys.stderr)
        return 1
    print(f"all {len(chosen)} scenarios passed")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
