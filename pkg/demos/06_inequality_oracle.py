"""Randomized checks of every inequality used in the pinching arguments.

Each suite draws random second fundamental forms (Gaussian, clipped
Cauchy, near-umbilic and umbilic) and reports violations and the smallest
slack seen per step.
"""

from subpinch.oracle import SUITES, TrialConfig

for name, suite in SUITES.items():
    rep = suite(TrialConfig(seed=7, trials=2000))
    tight = min(rep.min_slack.items(), key=lambda kv: kv[1])
    print(f"{name:8s} checks={rep.checks:7d} violations={len(rep.violations)} tightest step {tight[0]} "
          f"slack {tight[1]:.3e}")
    if rep.notes:
        print("         notes:", rep.notes)
