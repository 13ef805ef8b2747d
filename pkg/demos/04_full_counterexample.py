"""End-to-end certification of the simultaneous-resolution obstruction.

Two monomial valuations nu_1, nu_2 on a power-series ring in two
variables share the same value group Z + Z tau but assign it different
indices q and p in their local charts.  Running quadratic transforms
along each valuation, every associated below-ring stays singular (its
exponent matrix keeps determinant -q or -p), and the induced cyclic
actions give local fundamental groups of conflicting prime orders.  No
single normal local ring can dominate both sequences.
"""

from valsweep.counterexample import (InstanceConfig, build,
                                     contradiction_report, singularity_sweep)

config = InstanceConfig(q=11, p=13, m=3, n=3, steps=25)
instance = build(config)
print("tau =", instance.tau, "  eps =", instance.epsilon)
for branch in instance.branches:
    print("branch matrix:", branch.matrix,
          " chart values:", [str(v.as_quadext()) for v in branch.chart_values])

report = singularity_sweep(instance, 25)
print("\nsweep verdict:", report.verdict.value)
print("records:", len(report.records))
regular_count = sum(r.regular for r in report.records)
print("regular below-rings found:", regular_count)
dets = sorted({r.det for r in report.records})
print("determinants seen:", dets)

contra = contradiction_report(instance, 25)
print("\nlocal fundamental group orders:", contra.orders)
print("conflict certified:", contra.conflict)
