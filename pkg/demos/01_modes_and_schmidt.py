#!/usr/bin/env python3
"""Vortex modes and their Hermite-Gaussian decomposition.

Evaluates LG amplitudes in the scaled plane, prints the Schmidt (LG -> HG)
coefficient tables, and confirms that summing the expansion reproduces the
vortex mode point by point.
"""

import numpy as np

from vortexbell import (
    ScaleParams,
    hg_amplitude,
    lg_amplitude,
    physical_to_scaled,
    reconstruct_from_schmidt,
    schmidt_coefficients,
)

print("=== LG amplitudes at sample points ===")
print("The lowest vortex mode is (1/sqrt(pi)) (X + iY) exp(-(X^2+Y^2)/2):")
for X, Y in [(0.0, 0.0), (1.0, 0.0), (0.5, -0.5)]:
    value = lg_amplitude((1, 0), X, Y)
    print(f"  Phi_10({X:+.1f}, {Y:+.1f}) = {value:.6f}")

print("\nAt the origin every mode with a vortex core vanishes, the ground")
print("Gaussian peaks at 1/sqrt(pi):")
for nm in [(0, 0), (1, 0), (2, 1), (3, 3)]:
    print(f"  Phi_{nm[0]}{nm[1]}(0, 0) = {lg_amplitude(nm, 0.0, 0.0):.6f}")

print("\n=== Schmidt coefficients ===")
for nm in [(1, 0), (2, 1), (2, 2)]:
    print(f"mode {nm}: l = {nm[0] - nm[1]}")
    for k, term in enumerate(schmidt_coefficients(nm)):
        c = term.coefficient
        print(
            f"  k={k}  HG({term.hg_index.n},{term.hg_index.m})  "
            f"c = {c.real:+.6f}{c.imag:+.6f}i   |c|^2 = {abs(c)**2:.6f}"
        )
    total = sum(abs(t.coefficient) ** 2 for t in schmidt_coefficients(nm))
    print(f"  sum |c|^2 = {total:.12f}")

print("\n=== Reconstruction identity ===")
axis = np.linspace(-3.0, 3.0, 13)
X, Y = np.meshgrid(axis, axis, indexing="ij")
for nm in [(1, 0), (3, 1), (4, 4)]:
    err = np.max(np.abs(reconstruct_from_schmidt(nm, X, Y) - lg_amplitude(nm, X, Y)))
    print(f"  mode {nm}: max |sum(HG) - LG| over a 13x13 grid = {err:.2e}")

print("\nThe expansion swaps orbital angular momentum for HG mode balance;")
print("the two-term (1,0) case splits evenly between HG(1,0) and i*HG(0,1):")
v = schmidt_coefficients((1, 0))
u = (
    v[0].coefficient * hg_amplitude((1, 0), 0.8, 0.2)
    + v[1].coefficient * hg_amplitude((0, 1), 0.8, 0.2)
)
print(f"  reassembled: {u:.6f}  direct: {lg_amplitude((1, 0), 0.8, 0.2):.6f}")

print("\n=== Physical units enter only at the boundary ===")
scale = ScaleParams(w=1.0e-3, lambdabar=632.8e-9 / (2 * np.pi))
X, P = physical_to_scaled(0.35e-3, 2.0e-7, scale)
print(f"  w = 1 mm HeNe beam: x = 0.35 mm, p = 2e-7  ->  X = {X:.4f}, P = {P:.4f}")
