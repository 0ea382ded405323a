"""The J-order and which classical inequalities survive.

X <=_J Y means J(Y - X) is PSD.  Fractional powers pow_J(., t) are
monotone for t in [0, 1] but fail at t = 2, inversion is antitone, and
the Ando-Hiai and Furuta inequalities transfer to the cone.
"""

import numpy as np

from jcone import (Signature, ando_hiai_check, ando_hiai_normalize,
                   furuta_check, is_j_positive, j_leq, pow_J,
                   random_pj_bounded)

sig = Signature(1, 1)
j = sig.matrix()
rng = np.random.default_rng(21)

# Monotonicity on [0, 1] for a random comparable pair.
X = random_pj_bounded(sig, "R", rng)
Y = is_j_positive(X.matrix + j @ np.diag([0.7, 0.4]), sig)
print("X <=_J Y:", j_leq(X, Y).holds)
for t in (0.25, 0.5, 1.0):
    print(f"  pow_J monotone at t={t}:", j_leq(pow_J(X, t), pow_J(Y, t)).holds)

# The classic failure at t = 2 (squares of comparable matrices need not
# be comparable), pushed into the cone through J.
base = np.array([[1.0, 1.0], [1.0, 1.01]])
Xc = is_j_positive(j @ base, sig)
Yc = is_j_positive(j @ (base + np.diag([1.0, 0.0])), sig)
print("\ncounterexample pair comparable:", j_leq(Xc, Yc).holds)
v = j_leq(pow_J(Xc, 2.0), pow_J(Yc, 2.0))
print("squares comparable:", v.holds, " margin:", v.margin)

# Inversion flips the order.
print("\ninversion antitone:",
      j_leq(pow_J(Y, -1.0), pow_J(X, -1.0)).holds)

# Ando-Hiai: if the mean of a normalized pair stays below J, so do the
# means of all powers r >= 1.
A = random_pj_bounded(sig, "C", rng)
B = random_pj_bounded(sig, "C", rng)
A, B = ando_hiai_normalize(A, B, 0.5)
for r in (1.0, 1.5, 2.0, 3.0):
    verdict = ando_hiai_check(A, B, 0.5, r)
    print(f"Ando-Hiai r={r}: holds={verdict.holds}"
          f" conclusion margin={verdict.conclusion_margin:.3e}")

# Furuta: from B <=_J A, a chain of inequalities for powers (p, r).
Af = is_j_positive(np.diag([8.0, -27.0]), sig)
Bf = is_j_positive(np.diag([2.0, -3.0]), sig)
for p in (1.0, 2.0):
    for r in (1.0, 2.0):
        verdict = furuta_check(Af, Bf, p, r)
        print(f"Furuta p={p} r={r}: holds={verdict.holds}")
