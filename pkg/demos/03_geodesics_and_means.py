"""Geodesics, weighted means, and the Riccati characterization.

The cone carries the geometry pulled back from the classical positive
cone through X -> JX.  The geodesic between A and B evaluated at t is
the t-weighted geometric mean; the midpoint solves the Riccati equation
X A^{-1} X = B inside the cone, and it is the maximum of the set of
J-Hermitian X making the block matrix [[JA, JX], [JX, JB]] PSD.
"""

import numpy as np

from jcone import (Signature, fnorm, geodesic, geodesic_distance,
                   geodesic_ode_residual, is_j_positive, maximality_check,
                   pow_J, riccati_residual, weighted_mean)

sig = Signature(1, 1)

# Diagonal sanity: means of commuting matrices are entrywise geometric.
A = is_j_positive(np.diag([2.0, -3.0]), sig)
B = is_j_positive(np.diag([8.0, -27.0]), sig)
mid = weighted_mean(A, B, 0.5)
print("mean of diag(2,-3) and diag(8,-27) =", np.diag(mid.mean.matrix).real)
print("distance =", geodesic_distance(A, B),
      " (= sqrt(ln^2 4 + ln^2 9) =", np.hypot(np.log(4), np.log(9)), ")\n")

# A noncommuting pair: the mean is NOT the product of square roots.
P = is_j_positive(np.array([[2.0, 1.0], [-1.0, -2.0]]), sig)
Q = is_j_positive(np.array([[3.0, 1.0], [-1.0, -1.0]]), sig)
M = weighted_mean(P, Q, 0.5).mean
naive = pow_J(P, 0.5).matrix @ pow_J(Q, 0.5).matrix
print("mean - sqrt(P) sqrt(Q) =")
print(np.round(M.matrix - naive, 6))

# Riccati residual and the block-PSD maximality certificate.
print("\nRiccati |M P^-1 M - Q| =", riccati_residual(M, P, Q))
print("block certificate margin at the mean:",
      maximality_check(M, P, Q).margin)
bumped = M.matrix + np.diag([0.2, -0.2])
print("margin just above the mean:", maximality_check(bumped, P, Q).margin,
      " (negative: the mean is the maximum)\n")

# The geodesic satisfies the second-order ODE of the pulled-back metric.
print("geodesic ODE residual at t=0.5:",
      geodesic_ode_residual(P, Q, 0.5, 1e-4))
print("endpoint checks:",
      fnorm(geodesic(P, Q, 0.0).matrix - P.matrix),
      fnorm(geodesic(P, Q, 1.0).matrix - Q.matrix))
