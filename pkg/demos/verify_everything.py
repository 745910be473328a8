"""Run every verification suite for ranks 1..4 and print a short tally."""

from cpq.cli import SUITES, run_verification

for ell in range(1, 5):
    for s in SUITES:
        res = run_verification(s, ell)
        bad = [n for n, ok, _ in res if not ok]
        print(f"l={ell} {s:14s} {len(res):4d} checks  {'ok' if not bad else bad}")
