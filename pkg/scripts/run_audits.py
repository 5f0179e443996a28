#!/usr/bin/env python3
"""Run the order-wide audits in one go and summarize.

Covers parameter stability, the interval property for both graph and
forest families, and the no-single-edge-move check, each up to a chosen
order.  The optional order-8 rank audit walks every forest on eight
vertices, confirms rank = 2*matching by exact elimination, and checks
the matching step of every forest-preserving switch; it takes a few
minutes and is off by default.
"""

import argparse
import sys
import time

from twoswitch import parameters
from twoswitch.explorer import (
    edge_diff_audit,
    enumerate_forests,
    interval_sweep,
    stability_sweep,
)
from twoswitch.graphs import Graph
from twoswitch.parameters import adjacency_rank, forest_matching_number
from twoswitch.switch import SwitchKind, apply_switch, classify, nontrivial_matrices


def audit_rank_steps_order_8() -> bool:
    kinds = (SwitchKind.F_SWITCH, SwitchKind.T_SWITCH)
    forests = 0
    steps = 0
    t0 = time.time()
    for edges in enumerate_forests(8):
        g = Graph(8, edges)
        mu = forest_matching_number(g)
        if adjacency_rank(g) != 2 * mu:
            print(f"  rank identity FAILS on {edges}")
            return False
        forests += 1
        for m in nontrivial_matrices(g):
            if classify(m, g) not in kinds:
                continue
            steps += 1
            if abs(forest_matching_number(apply_switch(m, g)) - mu) > 1:
                print(f"  matching step FAILS on {edges} under {m}")
                return False
        if forests % 100000 == 0:
            print(f"  ... {forests} forests, {steps} steps, {time.time()-t0:.0f}s")
    print(f"  rank(F) = 2*matching on all {forests} forests")
    print(f"  all {steps} forest-preserving switch steps within 1 matching unit")
    return True


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=7, choices=range(1, 8))
    ap.add_argument(
        "--rank-steps-order-8",
        action="store_true",
        help="also run the long exhaustive order-8 forest rank audit",
    )
    args = ap.parse_args()

    failed = False
    t0 = time.time()
    for n in range(1, args.max_order + 1):
        reports = stability_sweep(n)
        bad = [k for k, r in reports.items() if not r.passed]
        checked = sum(r.checked for r in reports.values())
        verdict = "pass" if not bad else f"FAIL {bad}"
        print(f"stability  n={n}: {verdict} ({checked} incidences)")
        failed |= bool(bad)
    for n in range(1, args.max_order + 1):
        bad = []
        for kind in parameters.STABLE_KINDS:
            for family in ("all", "forest"):
                if not interval_sweep(n, kind, family).passed:
                    bad.append((kind, family))
        verdict = "pass" if not bad else f"FAIL {bad}"
        print(f"interval   n={n}: {verdict}")
        failed |= bool(bad)
    for n in range(2, args.max_order + 1):
        report = edge_diff_audit(n)
        verdict = "pass" if report.passed else "FAIL"
        print(f"edge-move  n={n}: {verdict} ({report.checked} moves)")
        failed |= not report.passed
    if args.rank_steps_order_8:
        print("rank audit n=8:")
        failed |= not audit_rank_steps_order_8()
    print(f"total {time.time()-t0:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
