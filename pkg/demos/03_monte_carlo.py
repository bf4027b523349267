#!/usr/bin/env python3
# Monte Carlo verification: hammer the master inequality with random
# states, observables and deformation parameters, then report the worst
# relative slack seen. Everything is reproducible from one seed.

import numpy as np

import qcbounds as qc

TRIALS = 2_000
SEED = 77

worst = np.inf
worst_case = None
regime_counts = {}

for index in range(TRIALS):
    rng = qc.SeededRng(SEED, index)
    n = 2 + index % 4
    # Half the states are rank-deficient to exercise the boundary of the
    # state space.
    if index % 2 == 1:
        rank = 1 + int(rng.split(1).generator().integers(0, n))
    else:
        rank = n
    state = qc.random_density(n, min(rank, n), rng.split(2))
    a = qc.random_hermitian(n, rng.split(3))
    b = qc.random_hermitian(n, rng.split(4))
    q = float(rng.split(0).generator().uniform(-3.0, 3.0))

    report = qc.bound_report(state, a, b, q)
    regime_counts[report.regime.value] = regime_counts.get(report.regime.value, 0) + 1

    relative = report.slack / max(1.0, report.product)
    if relative < worst:
        worst = relative
        worst_case = (index, n, q)

print(f"{TRIALS} trials, dims 2-5, q uniform on [-3, 3]")
print("regime counts:", dict(sorted(regime_counts.items())))
print(f"worst relative slack: {worst:.3e} at trial {worst_case[0]}"
      f" (n = {worst_case[1]}, q = {worst_case[2]:.4f})")

# Anything more negative than float noise would be a violation.
assert worst >= -1e-9
print("no violations at relative tolerance 1e-9")
