"""Running the randomized verification harness from Python.

Each suite checks one family of claimed identities or inequalities on a
seeded stream of instances.  Reports are deterministic for a given seed and
independent of the worker count, and any failure carries a replayable
payload.
"""

from hyperconn.verify import SUITE_NAMES, replay, run

print("available suites:")
for name in SUITE_NAMES:
    print(f"  {name}")

print()
print("a small deterministic run of three suites:")
report = run(
    seed=7,
    samples=40,
    max_vertices=6,
    suites=["ground-truth", "structural", "domination"],
)
for line in report.format_lines():
    print(f"  {line}")

print()
total_failures = sum(s.failures for s in report.results)
if total_failures:
    first = next(s.first_failure for s in report.results if s.first_failure)
    print(f"replaying the first failure: {replay(first)}")
else:
    print("no failures to replay; a recorded failure would rerun via replay().")
