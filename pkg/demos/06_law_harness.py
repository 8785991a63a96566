"""The randomized law harness: seeded suites, reports, and mutation testing.

Every suite draws reproducible instances (trial i always sees the same
stream for a given seed) and reports failures with minimized witnesses.
The drop-weight mutation corrupts the multiplication on purpose to show the
unit and associativity suites catch it.
"""

import json

from idemkit import run_suite, suite_names
from idemkit.laws import SUITES

# what gets verified
for name in suite_names():
    print(f"{name:10s} {SUITES[name].law}")

# a clean run: zero failures, deterministic per seed
report = run_suite("assoc", trials=100, seed=0)
print(f"\nassoc: ok={report.ok} trials={report.trials} elapsed={report.elapsed:.2f}s")

again = run_suite("assoc", trials=100, seed=0)
print("same seed, same report:", report.to_doc() == again.to_doc())

# mutate the multiplication and the unit suite fails with a tiny witness
broken = run_suite("unit", trials=100, seed=0, mutate="drop-weight")
print(f"\nmutated unit: ok={broken.ok} failures={len(broken.failures)}")
first = broken.failures[0]
print("witness:", json.dumps(first.witness))
print("(shrunk while the failure persisted: points and support entries drop out)")
