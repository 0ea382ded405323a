"""Dense square matrices over R, C and H with Hermitian spectral calculus.

Real and complex matrices are plain numpy arrays (real dtype means R, complex
dtype means C).  Quaternionic matrices are stored as a pair (a, b) of complex
arrays meaning A + B*j, and all spectral work routes through the embedding
Psi(A + B*j) = [[A, B], [-conj(B), conj(A)]] into 2n x 2n complex matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotHermitian, NotInImage, NotPositive, Singular
from .scalars import Quaternion


class QMatrix:
    """Quaternionic matrix A + B*j held as two complex numpy arrays."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=None):
        a = np.asarray(a, dtype=complex)
        b = np.zeros_like(a) if b is None else np.asarray(b, dtype=complex)
        if a.shape != b.shape:
            raise ValueError("component shapes differ")
        self.a = a
        self.b = b

    @property
    def shape(self):
        return self.a.shape

    def __add__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return QMatrix(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self.a, -self.b)

    def __mul__(self, s) -> "QMatrix":
        # Real scalars only: they are central in H, so the side does not matter.
        s = float(s)
        return QMatrix(s * self.a, s * self.b)

    __rmul__ = __mul__

    def __truediv__(self, s) -> "QMatrix":
        return self * (1.0 / float(s))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        # (A1 + B1 j)(A2 + B2 j) = (A1 A2 - B1 conj(B2)) + (A1 B2 + B1 conj(A2)) j
        a = self.a @ other.a - self.b @ np.conj(other.b)
        b = self.a @ other.b + self.b @ np.conj(other.a)
        return QMatrix(a, b)

    @property
    def H(self) -> "QMatrix":
        # Entrywise quaternion conjugate of the transpose.
        return QMatrix(self.a.conj().T, -self.b.T)

    def trace(self) -> Quaternion:
        z1 = complex(np.trace(self.a))
        z2 = complex(np.trace(self.b))
        return Quaternion.from_complex_pair(z1, z2)

    def entry(self, i: int, j: int) -> Quaternion:
        return Quaternion.from_complex_pair(complex(self.a[i, j]), complex(self.b[i, j]))

    @staticmethod
    def from_quaternions(rows) -> "QMatrix":
        a = np.array([[complex(q.a, q.b) for q in row] for row in rows])
        b = np.array([[complex(q.c, q.d) for q in row] for row in rows])
        return QMatrix(a, b)

    def to_quaternions(self):
        m, n = self.shape
        return [[self.entry(i, j) for j in range(n)] for i in range(m)]

    @staticmethod
    def eye(n: int) -> "QMatrix":
        return QMatrix(np.eye(n, dtype=complex))

    @staticmethod
    def zeros(shape) -> "QMatrix":
        return QMatrix(np.zeros(shape, dtype=complex))

    def __repr__(self):
        return f"QMatrix(a={self.a!r}, b={self.b!r})"


def field_of(X) -> str:
    if isinstance(X, QMatrix):
        return "H"
    return "C" if np.iscomplexobj(X) else "R"


def identity(n: int, field: str):
    if field == "H":
        return QMatrix.eye(n)
    if field == "C":
        return np.eye(n, dtype=complex)
    return np.eye(n)


def zeros(n: int, field: str):
    if field == "H":
        return QMatrix.zeros((n, n))
    if field == "C":
        return np.zeros((n, n), dtype=complex)
    return np.zeros((n, n))


def adjoint(X):
    if isinstance(X, QMatrix):
        return X.H
    return np.asarray(X).conj().T


def fnorm(X) -> float:
    """Frobenius norm sqrt(trd(X* X)), uniform across the three fields."""
    if isinstance(X, QMatrix):
        return float(np.sqrt(np.linalg.norm(X.a) ** 2 + np.linalg.norm(X.b) ** 2))
    return float(np.linalg.norm(X))


def trd(X) -> float:
    """Reduced trace: real part of the trace (real part of tr(A) for A + B*j)."""
    if isinstance(X, QMatrix):
        return float(np.real(np.trace(X.a)))
    return float(np.real(np.trace(X)))


def allclose(X, Y, tol: float = 1e-9) -> bool:
    scale = max(1.0, fnorm(X), fnorm(Y))
    return fnorm(X - Y) <= tol * scale


def psi_matrix(X: QMatrix) -> np.ndarray:
    """Embed A + B*j as the 2n x 2n complex matrix [[A, B], [-conj(B), conj(A)]]."""
    if not isinstance(X, QMatrix):
        raise TypeError("psi_matrix expects a quaternionic matrix")
    return np.block([[X.a, X.b], [-np.conj(X.b), np.conj(X.a)]])


def psi_structural_residual(M: np.ndarray) -> float:
    """Distance of M from the image of the embedding: ||M J2n - J2n conj(M)||_F."""
    M = np.asarray(M, dtype=complex)
    n2 = M.shape[0]
    if M.shape != (n2, n2) or n2 % 2:
        raise ValueError("expected an even-dimensional square matrix")
    n = n2 // 2
    j2n = np.block([[np.zeros((n, n)), np.eye(n)], [-np.eye(n), np.zeros((n, n))]])
    return float(np.linalg.norm(M @ j2n - j2n @ np.conj(M)))


def psi_inverse(M: np.ndarray, tol: float = 1e-8) -> QMatrix:
    M = np.asarray(M, dtype=complex)
    if psi_structural_residual(M) > tol * max(1.0, np.linalg.norm(M)):
        raise NotInImage("matrix does not satisfy M J2n = J2n conj(M)")
    n = M.shape[0] // 2
    return QMatrix(M[:n, :n], M[:n, n:])


def mat_inverse(X):
    if isinstance(X, QMatrix):
        return psi_inverse(mat_inverse(psi_matrix(X)))
    X = np.asarray(X)
    sv = np.linalg.svd(X, compute_uv=False)
    if sv[-1] <= 1e-13 * max(1.0, sv[0]):
        raise Singular("smallest singular value below threshold")
    return np.linalg.inv(X)


def _check_hermitian(X, tol: float = 1e-10):
    if fnorm(X - adjoint(X)) > tol * max(1.0, fnorm(X)):
        raise NotHermitian("adjoint-symmetry residual too large")


@dataclass(frozen=True)
class SpectralDecomposition:
    """Unitary factor and descending real eigenvalues of a Hermitian matrix."""

    unitary: object
    eigenvalues: np.ndarray

    def reconstruct(self):
        U = self.unitary
        if isinstance(U, QMatrix):
            lam = QMatrix(np.diag(self.eigenvalues.astype(complex)))
            return U @ lam @ U.H
        return U @ np.diag(self.eigenvalues) @ U.conj().T


def _quat_vdot(x: QMatrix, y: QMatrix) -> Quaternion:
    # <x, y> = sum conj(x_i) y_i for column vectors x = x1 + x2 j.
    z1 = np.vdot(x.a, y.a) + np.vdot(y.b, x.b)
    z2 = np.vdot(x.a, y.b) - np.vdot(y.a, x.b)
    return Quaternion.from_complex_pair(complex(z1), complex(z2))


def _quat_scale_right(x: QMatrix, s: Quaternion) -> QMatrix:
    s1, s2 = s.as_complex_pair()
    return QMatrix(x.a * s1 - x.b * np.conj(s2), x.a * s2 + x.b * np.conj(s1))


def _quaternionic_eig(X: QMatrix) -> SpectralDecomposition:
    """Spectral decomposition with a quaternionic unitary, via the embedding.

    Eigenvectors of Psi(X) come in pairs spanning one quaternionic line each;
    a quaternionic Gram-Schmidt pass selects n of the 2n and orthonormalizes
    inside degenerate clusters.
    """
    n = X.shape[0]
    w, V = np.linalg.eigh(psi_matrix(X))
    w, V = w[::-1], V[:, ::-1]
    cols = []
    vals = []
    for k in range(2 * n):
        if len(cols) == n:
            break
        v = V[:, k]
        x = QMatrix(v[:n].reshape(-1, 1), -np.conj(v[n:]).reshape(-1, 1))
        for u in cols:
            x = x - _quat_scale_right(u, _quat_vdot(u, x))
        nrm = fnorm(x)
        if nrm > 1e-3:
            cols.append(x / nrm)
            vals.append(w[k])
    if len(cols) != n:
        raise NotHermitian("quaternionic eigenvector selection failed")
    U = QMatrix(np.hstack([c.a for c in cols]), np.hstack([c.b for c in cols]))
    return SpectralDecomposition(U, np.array(vals))


def hermitian_eig(X, tol: float = 1e-10) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""
    _check_hermitian(X, tol)
    if isinstance(X, QMatrix):
        return _quaternionic_eig(X)
    w, U = np.linalg.eigh(np.asarray(X))
    return SpectralDecomposition(U[:, ::-1], w[::-1])


def eigvals_hermitian(X, tol: float = 1e-10) -> np.ndarray:
    """Descending real eigenvalues; for H the doubled embedded list is halved."""
    _check_hermitian(X, tol)
    if isinstance(X, QMatrix):
        w = np.linalg.eigvalsh(psi_matrix(X))[::-1]
        return w[::2]
    return np.linalg.eigvalsh(np.asarray(X))[::-1]


def matrix_function(X, f):
    """Apply a real function to a Hermitian matrix through its eigenvalues."""
    _check_hermitian(X)
    if isinstance(X, QMatrix):
        return psi_inverse(matrix_function(psi_matrix(X), f))
    X = np.asarray(X)
    w, U = np.linalg.eigh(X)
    out = (U * f(w)) @ U.conj().T
    return out.real if not np.iscomplexobj(X) else out


def _check_pd_for_function(X, tol: float = 1e-10):
    lam = eigvals_hermitian(X)
    if lam[-1] <= tol * max(1.0, abs(lam[0]), abs(lam[-1])):
        raise NotPositive("smallest eigenvalue at or below the positivity threshold")


def mat_exp_h(X):
    return matrix_function(X, np.exp)


def mat_log_pd(X):
    _check_pd_for_function(X)
    return matrix_function(X, np.log)


def mat_pow_pd(X, t: float):
    _check_pd_for_function(X)
    return matrix_function(X, lambda w: np.power(w, float(t)))


def mat_sqrt_pd(X):
    return mat_pow_pd(X, 0.5)


def is_positive_definite(X, tol: float = 1e-10) -> bool:
    lam = eigvals_hermitian(X)
    spectral_norm = max(abs(lam[0]), abs(lam[-1]))
    return lam[-1] > tol * max(1.0, spectral_norm)


def block2x2(P, Q, R, S):
    """Assemble [[P, Q], [R, S]] respecting the field of the blocks."""
    if isinstance(P, QMatrix):
        return QMatrix(np.block([[P.a, Q.a], [R.a, S.a]]),
                       np.block([[P.b, Q.b], [R.b, S.b]]))
    return np.block([[P, Q], [R, S]])
