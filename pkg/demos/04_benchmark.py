"""A small replicated benchmark (desk-scale version of the full harness).

Runs a handful of seeded replicates of simulate -> detect -> score for two
signals and prints the aggregated report table.  The full 100-replicate
runs live in the acceptance test suite and the `notseg bench` command.
"""

from notseg import run_benchmark

for model in ("teeth", "wave1"):
    report = run_benchmark(model, "gauss", sd=1.0, reps=10, m=10000, seed=11)
    print(report.to_table())
    print()
