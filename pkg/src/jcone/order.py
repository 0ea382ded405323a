"""The Loewner order on Hermitian matrices and its pullback on the cone P_J.

X <=_J Y means JX <= JY in the classical positive-semidefinite order; both
predicates return the margin (smallest eigenvalue of the difference) so that
callers can assert strictness or near-equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, NotHermitian, NotJHermitian
from .jstruct import JPositive, Signature, is_j_hermitian
from .matcore import adjoint, eigvals_hermitian, fnorm


@dataclass(frozen=True)
class OrderVerdict:
    holds: bool
    margin: float


def loewner_leq(X, Y, tol: float = 1e-9) -> OrderVerdict:
    """X <= Y iff Y - X is positive semi-definite, with slack tol * scale."""
    if X.shape != Y.shape:
        raise DimensionMismatch("operands differ in shape")
    for Z in (X, Y):
        if fnorm(Z - adjoint(Z)) > 1e-8 * max(1.0, fnorm(Z)):
            raise NotHermitian("order operands must be Hermitian")
    lam = eigvals_hermitian(Y - X, tol=1e-8)
    margin = float(lam[-1])
    scale = max(1.0, fnorm(X), fnorm(Y))
    return OrderVerdict(margin >= -tol * scale, margin)


def j_leq(X, Y, sig: Signature = None, tol: float = 1e-9) -> OrderVerdict:
    """X <=_J Y iff JX <= JY; accepts raw J-Hermitian matrices or certified ones."""
    if isinstance(X, JPositive):
        sig = X.signature
    if sig is None:
        raise ValueError("signature required for raw matrix arguments")
    Xm = X.matrix if isinstance(X, JPositive) else X
    Ym = Y.matrix if isinstance(Y, JPositive) else Y
    for Z in (Xm, Ym):
        if not is_j_hermitian(Z, sig, tol=1e-8):
            raise NotJHermitian("order operands must be J-Hermitian")
    j = sig.matrix_for(Xm)
    return loewner_leq(j @ Xm, j @ Ym, tol)
