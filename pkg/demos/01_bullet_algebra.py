"""The bullet product: a group structure on invertible matrices.

For a signature matrix J = diag(Id_p, -Id_q), the bullet product
A . B = A J B turns the invertible matrices into a group with neutral
element J and inverse J A^{-1} J.  The J-positive cone sits inside this
group, and every invertible g factors as g = k . p with k J-unitary and
p in the cone, mirroring the classical polar decomposition.
"""

import numpy as np

from jcone import (Signature, adjoint, bullet, bullet_inverse, fnorm,
                   polar_decompose_bullet, random_invertible)

sig = Signature(1, 1)
j = sig.matrix()
rng = np.random.default_rng(7)

A = random_invertible(sig, "R", rng)
B = random_invertible(sig, "R", rng)
C = random_invertible(sig, "R", rng)

print("signature J =")
print(j)

print("\nassociativity  |(A.B).C - A.(B.C)| =",
      fnorm(bullet(bullet(A, B, sig), C, sig)
            - bullet(A, bullet(B, C, sig), sig)))
print("neutral        |J.A - A| =", fnorm(bullet(j, A, sig) - A))
print("inverse        |A.A^ - J| =",
      fnorm(bullet(A, bullet_inverse(A, sig), sig) - j))

k, p = polar_decompose_bullet(A, sig)
print("\npolar factorization g = k . p")
print("  reconstruction |k.p - g| =", fnorm(bullet(k, p, sig) - A))
print("  k unitary      |k*k - I| =", fnorm(adjoint(k) @ k - np.eye(2)))
print("  p in cone: eigenvalues of Jp =", np.linalg.eigvalsh(j @ p.matrix))
