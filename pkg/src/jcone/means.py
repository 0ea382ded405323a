"""Weighted geometric means on the cone P_J and the associated inequalities.

The weighted mean is the geodesic point, equivalently the pullback of the
classical weighted geometric mean under X -> JX.  At weight 1/2 it is the
unique P_J solution of the Riccati equation X A^{-1} X = B, and it is the
maximum of {X J-Hermitian : [[JA, JX], [JX, JB]] >= 0}.  The module also
provides the arithmetic and harmonic companions with the AGM sandwich, the
closed form for bullet-commuting pairs, and the Ando-Hiai and Furuta
inequalities transported to P_J.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (NotBulletCommuting, NotJHermitian, PremiseViolated,
                     SignatureMismatch, WeightOutOfRange)
from .geometry import geodesic
from .jcalc import bullet, bullet_commutator, pow_J
from .jstruct import JPositive, Signature, is_j_hermitian, is_j_positive
from .matcore import (block2x2, eigvals_hermitian, fnorm, mat_inverse)
from .order import OrderVerdict, j_leq


def _check_pair(A: JPositive, B: JPositive):
    if A.signature != B.signature or A.field != B.field:
        raise SignatureMismatch("operands live over different signatures or fields")


@dataclass(frozen=True)
class MeanResult:
    mean: JPositive
    riccati_residual: float
    weight: float


def riccati_residual(X: JPositive, A: JPositive, B: JPositive) -> float:
    """||X A^{-1} X - B||_F, the defect in the midpoint characterization."""
    r = X.matrix @ mat_inverse(A.matrix) @ X.matrix - B.matrix
    return fnorm(r)


def weighted_mean(A: JPositive, B: JPositive, t: float = 0.5) -> MeanResult:
    """The weighted geometric mean of A and B on P_J, weight t in [0, 1]."""
    _check_pair(A, B)
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise WeightOutOfRange(f"weight {t} outside [0, 1]")
    mean = geodesic(A, B, t)
    residual = riccati_residual(mean, A, B) if t == 0.5 else float("nan")
    return MeanResult(mean, residual, t)


def riccati_solve(A: JPositive, B: JPositive) -> JPositive:
    """The unique P_J solution of X A^{-1} X = B: the midpoint mean."""
    return weighted_mean(A, B, 0.5).mean


def maximality_check(X, A: JPositive, B: JPositive, tol: float = 1e-9) -> OrderVerdict:
    """PSD test of [[JA, JX], [JX, JB]].

    Feasible candidates satisfy X <=_J A # B, and the mid-mean itself is the
    maximum: feasible with zero margin.
    """
    _check_pair(A, B)
    sig = A.signature
    if isinstance(X, JPositive):
        X = X.matrix
    if not is_j_hermitian(X, sig, tol=1e-8):
        raise NotJHermitian("candidate must be J-Hermitian")
    j = sig.matrix_for(X)
    ja, jb, jx = j @ A.matrix, j @ B.matrix, j @ X
    block = block2x2(ja, jx, jx, jb)
    lam = eigvals_hermitian(block, tol=1e-8)
    margin = float(lam[-1])
    scale = max(1.0, fnorm(block))
    return OrderVerdict(margin >= -tol * scale, margin)


def arithmetic_mean_J(A: JPositive, B: JPositive, t: float = 0.5) -> JPositive:
    _check_pair(A, B)
    return is_j_positive((1.0 - float(t)) * A.matrix + float(t) * B.matrix, A.signature)


def harmonic_mean_J(A: JPositive, B: JPositive, t: float = 0.5) -> JPositive:
    """[(1-t) A^{-1}_J + t B^{-1}_J]^{-1}_J with J-power inverses throughout."""
    _check_pair(A, B)
    t = float(t)
    if t == 0.0:
        return A
    if t == 1.0:
        return B
    combo = (1.0 - t) * pow_J(A, -1).matrix + t * pow_J(B, -1).matrix
    return pow_J(is_j_positive(combo, A.signature), -1)


def commuting_bullet_mean(A: JPositive, B: JPositive, t: float = 0.5,
                          tol: float = 1e-8) -> JPositive:
    """Closed form A^{1-t}_J . B^t_J, valid when A and B bullet-commute."""
    _check_pair(A, B)
    sig = A.signature
    comm = bullet_commutator(A.matrix, B.matrix, sig)
    scale = max(1.0, fnorm(A.matrix) * fnorm(B.matrix))
    if fnorm(comm) > tol * scale:
        raise NotBulletCommuting("bullet commutator exceeds tolerance")
    t = float(t)
    if not 0.0 <= t <= 1.0:
        raise WeightOutOfRange(f"weight {t} outside [0, 1]")
    return is_j_positive(bullet(pow_J(A, 1.0 - t), pow_J(B, t), sig), sig)


@dataclass(frozen=True)
class InequalityVerdict:
    holds: bool
    vacuous: bool
    premise_margin: float
    conclusion_margin: float


def ando_hiai_normalize(A: JPositive, B: JPositive, t: float,
                        margin: float = 0.05) -> tuple[JPositive, JPositive]:
    """Rescale both arguments by a common scalar so that A#_t B <=_J J holds.

    Valid because scaling both by mu scales the mean by mu.
    """
    _check_pair(A, B)
    sig = A.signature
    mean = weighted_mean(A, B, t).mean
    j = sig.matrix_for(mean.matrix)
    lam_max = float(eigvals_hermitian(j @ mean.matrix)[0])
    mu = (1.0 - margin) / lam_max
    return (is_j_positive(mu * A.matrix, sig), is_j_positive(mu * B.matrix, sig))


def ando_hiai_check(A: JPositive, B: JPositive, t: float, r: float,
                    tol: float = 1e-9) -> InequalityVerdict:
    """A #_t B <=_J J implies A^r_J #_t B^r_J <=_J J, for r >= 1, t in (0, 1)."""
    _check_pair(A, B)
    if r < 1.0:
        raise ValueError("need r >= 1")
    if not 0.0 < t < 1.0:
        raise ValueError("need t in (0, 1)")
    sig = A.signature
    jmat = sig.matrix(A.field)
    j_elt = is_j_positive(jmat, sig)
    premise = j_leq(weighted_mean(A, B, t).mean, j_elt, tol=tol)
    if not premise.holds:
        return InequalityVerdict(True, True, premise.margin, float("nan"))
    powered = weighted_mean(pow_J(A, r), pow_J(B, r), t).mean
    conclusion = j_leq(powered, j_elt, tol=tol)
    return InequalityVerdict(conclusion.holds, False, premise.margin,
                             conclusion.margin)


def furuta_check(A: JPositive, B: JPositive, p_exp: float, r: float,
                 tol: float = 1e-9) -> OrderVerdict:
    """(A^{r/2}_J . B^p_J . A^{r/2}_J)^{r/(r+p)}_J <=_J A^r_J for 0 <_J B <=_J A."""
    _check_pair(A, B)
    if p_exp < 0.0 or r < 1.0:
        raise ValueError("need p >= 0 and r >= 1")
    premise = j_leq(B, A, tol=tol)
    if not premise.holds:
        raise PremiseViolated("need B <=_J A")
    sig = A.signature
    half = pow_J(A, r / 2.0)
    inner = bullet(bullet(half, pow_J(B, p_exp), sig), half, sig)
    lhs = pow_J(is_j_positive(inner, sig), r / (r + p_exp))
    return j_leq(lhs, pow_J(A, r), tol=tol)
