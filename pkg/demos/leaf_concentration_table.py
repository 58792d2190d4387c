"""
Average maximum leaf concentration
==================================

D(T) is the largest number of leaves attached to one vertex.  Its mean over
uniform labelled trees is computed exactly for small n by walking every
Pruefer code, and estimated by sampling beyond that.
"""
from fractions import Fraction

from seidel_lab import average_D_exact, average_D_monte_carlo
from seidel_lab.bounds import REFERENCE_AVERAGE_D

for n in range(4, 9):
    res = average_D_exact(n)
    print(f"n={n:2d} exact  {res.mean:.6f} = {Fraction(res.exact_numerator, res.denominator)}")

for n in (10, 15, 20):
    res = average_D_monte_carlo(n, 200_000, seed=7)
    print(f"n={n:2d} MC     {res.mean:.4f} +/- {res.std_error:.4f}"
          f"  (reference {REFERENCE_AVERAGE_D[n]:.4f})")
