"""
Seidel energy and switching
===========================

Builds the Seidel matrix of a small tree, compares the Jacobi eigenvalues
with the exact characteristic polynomial, then shows that switching a
vertex set leaves the spectrum unchanged.
"""
import math

from seidel_lab import charpoly_oracle, seidel_energy, seidel_matrix, seidel_switch
from seidel_lab.graph import path_graph
from seidel_lab.spectral import charpoly_roots, seidel_spectrum

P4 = path_graph(4)
print("Seidel matrix of P4:")
print(seidel_matrix(P4))

# integer coefficients, leading term first: x^4 - 6x^2 + 5
coeffs = charpoly_oracle(seidel_matrix(P4))
print("characteristic polynomial:", coeffs)
print("exact roots   :", [round(r, 12) for r in charpoly_roots(coeffs)])
print("Jacobi        :", [round(x, 12) for x in seidel_spectrum(P4).eigenvalues])
print("energy        :", seidel_energy(P4), "=", 2 + 2 * math.sqrt(5))

# Switching {0, 2} gives a different graph with the same Seidel spectrum.
H = seidel_switch(P4, [0, 2])
print("\nswitched edges:", H.sorted_edges())
print("energy after switching:", seidel_energy(H))
