"""The signature form J = diag(Id_p, -Id_q) and the structures it induces.

Provides the sharp involution X -> J X* J, membership tests for J-Hermitian
matrices, J-positive matrices and the (J-)unitary groups, the block shape of
J-Hermitian matrices with the Schur positivity test, and the bijection
phi_J: X -> JX between the J-Hermitian space and the Hermitian matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (DimensionMismatch, IndeterminateSchur, NotHermitian,
                     NotJHermitian, NotJPositive)
from .matcore import (QMatrix, adjoint, eigvals_hermitian, field_of, fnorm,
                      mat_inverse)


@dataclass(frozen=True)
class Signature:
    """Block sizes (p, q) of the form J = diag(Id_p, -Id_q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ValueError("need p, q >= 0 with p + q >= 1")

    @property
    def n(self) -> int:
        return self.p + self.q

    def diag(self) -> np.ndarray:
        return np.concatenate([np.ones(self.p), -np.ones(self.q)])

    def matrix(self, field: str = "R"):
        j = np.diag(self.diag())
        if field == "H":
            return QMatrix(j.astype(complex))
        if field == "C":
            return j.astype(complex)
        return j

    def matrix_for(self, X):
        return self.matrix(field_of(X))


def _check_dim(X, sig: Signature):
    if X.shape != (sig.n, sig.n):
        raise DimensionMismatch(f"expected {sig.n}x{sig.n}, got {X.shape}")


def sharp(X, sig: Signature):
    """The indefinite adjoint X -> J X* J."""
    _check_dim(X, sig)
    j = sig.matrix_for(X)
    return j @ adjoint(X) @ j


def is_j_hermitian(X, sig: Signature, tol: float = 1e-10) -> bool:
    _check_dim(X, sig)
    return fnorm(sharp(X, sig) - X) <= tol * max(1.0, fnorm(X))


def is_in_U_J(g, sig: Signature, tol: float = 1e-10) -> bool:
    """Membership in the J-unitary group: g# g = Id."""
    _check_dim(g, sig)
    from .matcore import identity
    eye = identity(sig.n, field_of(g))
    return fnorm(sharp(g, sig) @ g - eye) <= tol * max(1.0, fnorm(g) ** 2)


def is_in_K_J(g, sig: Signature, tol: float = 1e-10) -> bool:
    """Membership in K_J = U_J intersect U, the block-diagonal unitaries."""
    _check_dim(g, sig)
    from .matcore import identity
    eye = identity(sig.n, field_of(g))
    unitary = fnorm(adjoint(g) @ g - eye) <= tol * max(1.0, fnorm(g) ** 2)
    return unitary and is_in_U_J(g, sig, tol)


@dataclass(frozen=True)
class JHermitianBlocks:
    """Blocks of a J-Hermitian H = [[A, B], [-B*, D]] with A, D Hermitian."""

    a_block: object
    b_block: object
    d_block: object
    signature: Signature

    def reassemble(self):
        A, B, D = self.a_block, self.b_block, self.d_block
        if self.signature.p == 0:
            return D
        if self.signature.q == 0:
            return A
        if isinstance(A, QMatrix):
            C = -adjoint(B)
            return QMatrix(np.block([[A.a, B.a], [C.a, D.a]]),
                           np.block([[A.b, B.b], [C.b, D.b]]))
        return np.block([[A, B], [-adjoint(B), D]])


def block_decompose(H, sig: Signature, tol: float = 1e-10) -> JHermitianBlocks:
    if not is_j_hermitian(H, sig, tol):
        raise NotJHermitian("sharp-symmetry residual too large")
    p = sig.p
    if isinstance(H, QMatrix):
        A = QMatrix(H.a[:p, :p], H.b[:p, :p])
        B = QMatrix(H.a[:p, p:], H.b[:p, p:])
        D = QMatrix(H.a[p:, p:], H.b[p:, p:])
    else:
        A, B, D = H[:p, :p], H[:p, p:], H[p:, p:]
    return JHermitianBlocks(A, B, D, sig)


def schur_j_positive(blocks: JHermitianBlocks, tol: float = 1e-10) -> bool:
    """J-positivity via the block criterion: A > 0 and (-D) - B* A^{-1} B > 0."""
    A, B, D = blocks.a_block, blocks.b_block, blocks.d_block
    p, q = blocks.signature.p, blocks.signature.q
    if p == 0:
        return q == 0 or _pd(-D, tol)
    lam = eigvals_hermitian(A)
    scale = max(1.0, abs(lam[0]), abs(lam[-1]))
    if abs(lam[-1]) <= tol * scale:
        raise IndeterminateSchur("leading block numerically singular")
    if lam[-1] <= tol * scale:
        return False
    if q == 0:
        return True
    comp = (-D) - adjoint(B) @ mat_inverse(A) @ B
    return _pd(comp, tol)


def _pd(X, tol: float) -> bool:
    lam = eigvals_hermitian(X)
    return lam[-1] > tol * max(1.0, abs(lam[0]), abs(lam[-1]))


@dataclass(frozen=True)
class JPositive:
    """A certified member of the cone P_J: J-Hermitian with JX positive definite."""

    matrix: object
    signature: Signature
    lambda_min_of_jx: float

    @property
    def field(self) -> str:
        return field_of(self.matrix)


def is_j_positive(X, sig: Signature, tol: float = 1e-10) -> JPositive:
    """Certify membership in P_J; raises on rejection."""
    if not is_j_hermitian(X, sig, tol):
        raise NotJHermitian("sharp-symmetry residual too large")
    jx = sig.matrix_for(X) @ X
    lam = eigvals_hermitian(jx)
    if lam[-1] <= tol * max(1.0, abs(lam[0]), abs(lam[-1])):
        raise NotJPositive(f"lambda_min(JX) = {lam[-1]:.3e} not positive")
    return JPositive(X, sig, float(lam[-1]))


def in_pj(X, sig: Signature, tol: float = 1e-10) -> bool:
    """Boolean convenience wrapper around the certifying test."""
    try:
        is_j_positive(X, sig, tol)
        return True
    except (NotJHermitian, NotJPositive):
        return False


def phi_J(X, sig: Signature, tol: float = 1e-10):
    """The bijection X -> JX from the J-Hermitian space onto the Hermitian space."""
    if not is_j_hermitian(X, sig, tol):
        raise NotJHermitian("sharp-symmetry residual too large")
    return sig.matrix_for(X) @ X


def phi_J_inv(P, sig: Signature, tol: float = 1e-10):
    """Inverse bijection P -> JP from Hermitian matrices into the J-Hermitian space."""
    _check_dim(P, sig)
    if fnorm(P - adjoint(P)) > tol * max(1.0, fnorm(P)):
        raise NotHermitian("input is not Hermitian")
    return sig.matrix_for(P) @ P


def j_inner(x, y, sig: Signature):
    """The indefinite form B(x, y) = x* J y on column vectors."""
    if isinstance(x, QMatrix):
        if x.shape != (sig.n, 1) or y.shape != (sig.n, 1):
            raise DimensionMismatch("expected n x 1 quaternionic columns")
        s = sig.diag().reshape(-1, 1)
        jy = QMatrix(y.a * s, y.b * s)
        from .matcore import _quat_vdot
        return _quat_vdot(x, jy)
    x = np.asarray(x).reshape(-1)
    y = np.asarray(y).reshape(-1)
    if x.shape[0] != sig.n or y.shape[0] != sig.n:
        raise DimensionMismatch(f"expected vectors of length {sig.n}")
    return np.vdot(x, sig.diag() * y)
