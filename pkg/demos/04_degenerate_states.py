#!/usr/bin/env python3
# How the refined coefficient behaves at the two spectral extremes:
# rank-deficient states (smallest eigenvalue zero) and the maximally
# mixed state (all eigenvalues equal).

import numpy as np

import qcbounds as qc

# A rank-deficient state collapses the coefficient to the uniform
# prefactor 1/(1+|q|)^2, exactly, for every q.
rng = qc.SeededRng(11, 0)
state = qc.random_density(4, 2, rng.split(0))
print("rank-2 spectrum in dimension 4:", state.eigenvalues)
for q in (0.0, 0.5, 1.0, 2.0, -0.7):
    coefficient = qc.refined_coefficient(q, state.lambda_min, state.lambda_max)
    uniform = 1.0 / (1.0 + abs(q)) ** 2
    print(f"  q = {q:5.2f}: coefficient = {coefficient:.12f}"
          f"  uniform = {uniform:.12f}  equal: {coefficient == uniform}")

# The maximally mixed state kills every commutator trace, so at q = 1
# the refined bound degenerates to 0 rather than dividing by zero.
mixed = qc.maximally_mixed(3)
a = qc.random_hermitian(3, rng.split(1))
b = qc.random_hermitian(3, rng.split(2))
print("\nmaximally mixed, n = 3:")
print("  refined at q = 1:", qc.refined_q_bound(mixed, a, b, 1.0))

# Away from |q| = 1 the coefficient on the maximally mixed state is
# (1+q)^2 / ((1+q)^2 (1-q)^2) and the whole bound reduces to the plain
# squared product trace.
a0, b0 = qc.center(mixed, a), qc.center(mixed, b)
expected = abs(qc.q_trace_term(mixed, a0, b0, 0.0)) ** 2
for q in (0.0, 0.3, -0.6, 0.9):
    value = qc.refined_q_bound(mixed, a, b, q)
    print(f"  q = {q:4.1f}: refined = {value:.12f}  |Tr[rho A0 B0]|^2 = {expected:.12f}")
    assert abs(value - expected) < 1e-10
print("uniform-spectrum reduction confirmed")
