"""Atoms, translations and exact norms.

Builds a few functions out of displaced basis atoms, then shows the three
facts the whole package leans on: translations act isometrically, they map
atoms to atoms with a computable phase, and norms come out of the atom data
with no integration.
"""

import math

import numpy as np

from focklab import FockParams, basis_function, compose_phase, displaced_basis

params = FockParams(1.0)

e0 = basis_function(0, params)
e1 = basis_function(1, params)

print("== point evaluation ==")
print(f"e0(3+4i)      = {e0.evaluate(3 + 4j):.6f}")
print(f"e1(1)         = {e1.evaluate(1.0):.6f}")
print(f"(T_1 e0)(0)   = {e0.translate(1.0).evaluate(0.0):.6f}   (= e^-1/2 = {math.exp(-0.5):.6f})")

print()
print("== translations are isometric ==")
f = e0 + 2j * e1 + displaced_basis(1 - 1j, 3, params, coeff=0.5)
print(f"|f|            = {f.norm():.12f}")
for z in (1.0, 2 - 3j, -4j):
    print(f"|T_{z} f|".ljust(15), f"= {f.translate(z).norm():.12f}")

print()
print("== composition picks up a unimodular phase ==")
w, z = 1j, 1.0
phase, shift = compose_phase(w, z, params)
print(f"T_{w} T_{z} = phase * T_{shift} with phase = {phase:.6f}, |phase| = {abs(phase):.12f}")
lhs = f.translate(z).translate(w)
rhs = phase * f.translate(shift)
grid = np.linspace(-2, 2, 9) + 0.3j
print(f"max pointwise deviation on a grid: {np.max(np.abs(lhs.evaluate(grid) - rhs.evaluate(grid))):.2e}")

print()
print("== projection onto the undisplaced basis ==")
g = displaced_basis(1.0, 0, params)
for degree in (0, 4, 12, 40):
    coeffs = g.to_basis_coeffs(degree)
    print(f"degree {degree:>2}: |c|^2 = {coeffs.squared_sum():.12f}, truncation defect = {coeffs.defect:.3e}")

print()
print("== weighted sup norm, a grid estimate ==")
print(f"e0:      {e0.sup_norm_estimate(3.0, 0.01):.6f}   (peak 1 at the origin)")
print(f"e1:      {e1.sup_norm_estimate(3.0, 0.01):.6f}   (peak e^-1/2 on the unit circle)")
print(f"T_2 e0:  {displaced_basis(2.0, 0, params).sup_norm_estimate(4.0, 0.01):.6f}   (peak 1 near z = 2)")
