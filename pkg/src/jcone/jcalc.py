"""The bullet algebra and the J-exponential calculus on the cone P_J.

The bullet product A . B = A J B is associative with neutral element J, and
under it P_J behaves like the classical positive cone: exp_J(X) = J exp(JX)
is a bijection from the J-Hermitian space onto P_J, with logarithm
log_J(X) = J log(JX) and real powers X^t_J = J (JX)^t.
"""

from __future__ import annotations

import numpy as np

from .errors import NotJHermitian, Singular
from .jstruct import JPositive, Signature, is_j_hermitian, is_j_positive, sharp
from .matcore import (QMatrix, adjoint, field_of, fnorm, mat_exp_h,
                      mat_inverse, mat_log_pd, mat_pow_pd, mat_sqrt_pd)

MAX_POWER = 32.0


def _mat(X):
    return X.matrix if isinstance(X, JPositive) else X


def bullet(A, B, sig: Signature):
    """A . B = A J B."""
    A, B = _mat(A), _mat(B)
    return A @ sig.matrix_for(A) @ B


def bullet_inverse(A, sig: Signature):
    """Inverse for the bullet product: A . (J A^{-1} J) = J."""
    A = _mat(A)
    j = sig.matrix_for(A)
    return j @ mat_inverse(A) @ j


def bullet_commutator(X, Y, sig: Signature):
    """[X, Y]_J = X . Y - Y . X."""
    return bullet(X, Y, sig) - bullet(Y, X, sig)


def exp_J(X, sig: Signature, tol: float = 1e-10) -> JPositive:
    """exp_J(X) = J exp(JX); maps the J-Hermitian space onto P_J."""
    if not is_j_hermitian(X, sig, tol):
        raise NotJHermitian("exp_J needs a J-Hermitian argument")
    j = sig.matrix_for(X)
    return is_j_positive(j @ mat_exp_h(j @ X), sig, tol)


def log_J(X: JPositive):
    """log_J(X) = J log(JX); inverse of exp_J on P_J."""
    j = X.signature.matrix_for(X.matrix)
    return j @ mat_log_pd(j @ X.matrix)


def pow_J(X: JPositive, t: float) -> JPositive:
    """Fractional J-power X^t_J = J (JX)^t."""
    t = float(t)
    if abs(t) > MAX_POWER:
        raise ValueError(f"|t| > {MAX_POWER} rejected to avoid eigenvalue overflow")
    j = X.signature.matrix_for(X.matrix)
    return is_j_positive(j @ mat_pow_pd(j @ X.matrix, t), X.signature)


def polar_decompose_bullet(g, sig: Signature):
    """Unique factorization g = k . p with k unitary and p in P_J.

    Classically g = k ptilde with ptilde = (g* g)^{1/2}; then p = J ptilde so
    that k . p = k J J ptilde = k ptilde = g.
    """
    gsg = adjoint(g) @ g
    lam_ratio = np.sqrt(max(1e-300, _min_over_max_eig(gsg)))
    if lam_ratio <= 1e-13:
        raise Singular("argument numerically singular")
    ptilde = mat_sqrt_pd(gsg)
    k = g @ mat_inverse(ptilde)
    p = sig.matrix_for(g) @ ptilde
    return k, is_j_positive(p, sig)


def _min_over_max_eig(H) -> float:
    from .matcore import eigvals_hermitian
    lam = eigvals_hermitian(H)
    top = max(abs(lam[0]), abs(lam[-1]), 1e-300)
    return lam[-1] / top


def _random_matrix(n: int, field: str, rng: np.random.Generator):
    if field == "R":
        return rng.standard_normal((n, n))
    if field == "C":
        return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    b = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return QMatrix(a, b)


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_invertible(sig: Signature, field: str, seed) -> object:
    """Gaussian square matrix, redrawn while nearly singular."""
    rng = _as_rng(seed)
    for _ in range(100):
        g = _random_matrix(sig.n, field, rng)
        if np.sqrt(max(0.0, _min_over_max_eig(adjoint(g) @ g))) > 1e-3:
            return g
    raise Singular("could not draw a well-conditioned matrix")


def random_pj(sig: Signature, field: str, seed) -> JPositive:
    """Random cone element g J g#; the congruence action is transitive on P_J."""
    g = random_invertible(sig, field, seed)
    return is_j_positive(g @ sig.matrix_for(g) @ sharp(g, sig), sig)


def random_jhermitian(sig: Signature, field: str, seed):
    """Random element of the J-Hermitian space via symmetrization (Y + Y#)/2."""
    rng = _as_rng(seed)
    y = _random_matrix(sig.n, field, rng)
    return (y + sharp(y, sig)) * 0.5


def random_pj_bounded(sig: Signature, field: str, seed, radius: float = 2.0) -> JPositive:
    """Random cone element with ||log_J|| bounded by the given radius."""
    x = random_jhermitian(sig, field, seed)
    nrm = fnorm(x)
    if nrm > radius:
        x = x * (radius / nrm)
    return exp_J(x, sig)


def _random_unitary_block(n: int, field: str, rng: np.random.Generator):
    if n == 0:
        from .matcore import zeros
        return zeros(0, field)
    g = _random_matrix(n, field, rng)
    if isinstance(g, QMatrix):
        cols = []
        for k in range(n):
            x = QMatrix(g.a[:, k].reshape(-1, 1), g.b[:, k].reshape(-1, 1))
            from .matcore import _quat_scale_right, _quat_vdot
            for u in cols:
                x = x - _quat_scale_right(u, _quat_vdot(u, x))
            cols.append(x / fnorm(x))
        return QMatrix(np.hstack([c.a for c in cols]), np.hstack([c.b for c in cols]))
    q, r = np.linalg.qr(g)
    # Fix the phase so the distribution does not depend on the QR convention.
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_kj(sig: Signature, field: str, seed):
    """Random element of K_J: a block-diagonal pair of unitaries diag(u_p, u_q)."""
    rng = _as_rng(seed)
    up = _random_unitary_block(sig.p, field, rng)
    uq = _random_unitary_block(sig.q, field, rng)
    if field == "H":
        n = sig.n
        a = np.zeros((n, n), dtype=complex)
        b = np.zeros((n, n), dtype=complex)
        a[:sig.p, :sig.p], b[:sig.p, :sig.p] = up.a, up.b
        a[sig.p:, sig.p:], b[sig.p:, sig.p:] = uq.a, uq.b
        return QMatrix(a, b)
    out = np.zeros((sig.n, sig.n), dtype=complex if field == "C" else float)
    out[:sig.p, :sig.p] = up
    out[sig.p:, sig.p:] = uq
    return out
