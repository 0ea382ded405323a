"""The signed exponential calculus and its quirks.

exp_J(X) = J exp(JX) maps J-Hermitian matrices onto the J-positive cone,
with log_J and fractional powers pow_J defined the same way.  Two quirks
distinguish it from the classical exponential: the inverse of exp_J(X)
is exp(-JX) J, which generally differs from exp_J(-X), and the plain
matrix exponential is not injective on J-Hermitian matrices.
"""

import numpy as np
from scipy.linalg import expm

from jcone import (Signature, exp_J, fnorm, is_j_hermitian, log_J,
                   mat_inverse, pow_J, random_jhermitian)

sig = Signature(1, 1)

# A closed-form example: X = [[0, i], [i, 0]].
X = np.array([[0, 1j], [1j, 0]])
E = exp_J(X, sig)
print("exp_J(X) =")
print(np.round(E.matrix, 6))
print("exp_J(X)^-1 =")
print(np.round(mat_inverse(E.matrix), 6))
print("exp_J(-X)   =")
print(np.round(exp_J(-X, sig).matrix, 6))
print("-> the off-diagonal signs differ: inversion is not X -> -X here.\n")

# Non-injectivity: a nonzero J-Hermitian matrix whose exponential is Id.
W = np.array([[0, 2j * np.pi], [2j * np.pi, 0]])
print("W is J-Hermitian:", is_j_hermitian(W, sig), " |W| =", round(fnorm(W), 3))
print("|exp(W) - Id| =", fnorm(expm(W) - np.eye(2)), "\n")

# Round trips hold on the cone, where log_J inverts exp_J.
rng = np.random.default_rng(0)
H = random_jhermitian(sig, "C", rng)
H = H * (1.5 / max(1.0, fnorm(H)))
P = exp_J(H, sig)
print("log_J(exp_J(H)) error:", fnorm(log_J(P) - H))
print("pow_J(P, 3) vs chained squares:",
      fnorm(pow_J(P, 3.0).matrix
            - pow_J(pow_J(P, 1.5), 2.0).matrix))
