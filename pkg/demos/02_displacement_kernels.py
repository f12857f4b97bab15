"""Displacement matrix elements and their quadrature validation.

The closed form for <T_z e_k, e_j> (a Laguerre polynomial times a Gaussian
factor) is the workhorse behind every inner product in the package.  This
script prints a small table of elements, checks them against the brute-force
polar quadrature, and assembles a Gram matrix to show it is Hermitian and
positive with unit diagonal.
"""

import numpy as np

from focklab import (
    FockParams,
    basis_function,
    displaced_basis,
    displacement_element,
    gram_matrix,
    quadrature_inner_oracle,
)

params = FockParams(1.0)
z = 0.8 + 0.6j

print(f"== displacement elements <T_z e_k, e_j> at z = {z} ==")
jmax = 5
header = "j\\k " + "".join(f"{k:>18}" for k in range(jmax))
print(header)
for j in range(jmax):
    row = [displacement_element(z, j, k, params) for k in range(jmax)]
    print(f"{j:>3} " + "".join(f"{abs(v):>18.6e}" for v in row))

print()
print("== validation against the quadrature oracle ==")
worst = 0.0
for j in range(6):
    for k in range(6):
        closed = displacement_element(z, j, k, params)
        oracle = quadrature_inner_oracle(
            displaced_basis(z, k, params), basis_function(j, params), n_r=64, n_theta=128
        )
        worst = max(worst, abs(closed - oracle))
print(f"max |closed form - quadrature| over j,k <= 5: {worst:.2e}")

print()
print("== unitarity of translation, seen columnwise ==")
for k in (0, 3):
    total = sum(abs(displacement_element(z, j, k, params)) ** 2 for j in range(80))
    print(f"sum_j |<T_z e_{k}, e_j>|^2 = {total:.12f}")

print()
print("== Gram matrix of three displaced vacua ==")
family = [(0.0, 0), (1.0, 0), (1j, 0)]
gram = gram_matrix(family, params)
print(np.array_str(gram.entries, precision=4, suppress_small=True))
print(f"hermitian deviation: {np.max(np.abs(gram.entries - gram.entries.conj().T)):.2e}")
print(f"eigenvalues:         {np.round(np.linalg.eigvalsh(gram.entries), 6)}")
