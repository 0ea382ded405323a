import numpy as np
import pytest
from scipy.linalg import expm

from jcone.errors import NotHermitian, NotInImage, NotPositive, Singular
from jcone.matcore import (QMatrix, adjoint, allclose, eigvals_hermitian,
                           field_of, fnorm, hermitian_eig, identity,
                           is_positive_definite, mat_exp_h, mat_inverse,
                           mat_log_pd, mat_pow_pd, mat_sqrt_pd,
                           matrix_function, psi_inverse, psi_matrix,
                           psi_structural_residual, trd)
from jcone.scalars import QUAT_I, QUAT_J, Quaternion


def random_mat(n, field, rng):
    if field == "R":
        return rng.standard_normal((n, n))
    if field == "C":
        return rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return QMatrix(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)),
                   rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))


def random_hermitian(n, field, rng, radius=None):
    X = random_mat(n, field, rng)
    H = (X + adjoint(X)) * 0.5
    if radius is not None:
        nrm = fnorm(H)
        if nrm > radius:
            H = H * (radius / nrm)
    return H


FIELDS = ("R", "C", "H")


class TestBasics:
    def test_field_of(self):
        assert field_of(np.eye(2)) == "R"
        assert field_of(np.eye(2, dtype=complex)) == "C"
        assert field_of(QMatrix.eye(2)) == "H"

    def test_adjoint_example(self):
        X = np.array([[0, 1j], [1j, 0]])
        np.testing.assert_allclose(adjoint(X), np.array([[0, -1j], [-1j, 0]]))

    def test_adjoint_involution_and_antihomomorphism(self):
        rng = np.random.default_rng(0)
        for field in FIELDS:
            X, Y = random_mat(3, field, rng), random_mat(3, field, rng)
            assert allclose(adjoint(adjoint(X)), X, tol=1e-14)
            assert allclose(adjoint(X @ Y), adjoint(Y) @ adjoint(X), tol=1e-13)

    def test_inverse_identity(self):
        assert allclose(mat_inverse(np.eye(3)), np.eye(3), tol=1e-14)

    def test_inverse_diagonal(self):
        np.testing.assert_allclose(mat_inverse(np.diag([2.0, -3.0])),
                                   np.diag([0.5, -1.0 / 3.0]))

    def test_inverse_random(self):
        rng = np.random.default_rng(1)
        for field in FIELDS:
            X = random_mat(3, field, rng)
            assert allclose(X @ mat_inverse(X), identity(3, field), tol=1e-9)

    def test_inverse_singular(self):
        with pytest.raises(Singular):
            mat_inverse(np.array([[1.0, 1.0], [1.0, 1.0]]))

    def test_trd_identity(self):
        for field in FIELDS:
            assert trd(identity(4, field)) == pytest.approx(4.0)

    def test_trd_imaginary_diagonal(self):
        X = QMatrix.from_quaternions([[QUAT_I, Quaternion(0)],
                                      [Quaternion(0), QUAT_J]])
        assert trd(X) == pytest.approx(0.0)

    def test_trd_cyclic_quaternionic(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            A, B = random_mat(3, "H", rng), random_mat(3, "H", rng)
            assert trd(A @ B) == pytest.approx(trd(B @ A), abs=1e-11)


class TestPsi:
    def test_psi_identity(self):
        np.testing.assert_allclose(psi_matrix(QMatrix.eye(3)), np.eye(6))

    def test_psi_of_scalar_j(self):
        X = QMatrix.from_quaternions([[QUAT_J]])
        np.testing.assert_allclose(psi_matrix(X), np.array([[0, 1], [-1, 0]]))

    def test_psi_inverse_of_j2n(self):
        n = 3
        j2n = np.block([[np.zeros((n, n)), np.eye(n)],
                        [-np.eye(n), np.zeros((n, n))]])
        X = psi_inverse(j2n)
        np.testing.assert_allclose(X.a, np.zeros((n, n)))
        np.testing.assert_allclose(X.b, np.eye(n))

    def test_round_trip(self):
        rng = np.random.default_rng(3)
        X = random_mat(3, "H", rng)
        assert allclose(psi_inverse(psi_matrix(X)), X, tol=1e-14)

    def test_homomorphism_and_adjoint(self):
        rng = np.random.default_rng(4)
        X, Y = random_mat(3, "H", rng), random_mat(3, "H", rng)
        np.testing.assert_allclose(psi_matrix(X @ Y),
                                   psi_matrix(X) @ psi_matrix(Y), atol=1e-12)
        np.testing.assert_allclose(psi_matrix(adjoint(X)),
                                   psi_matrix(X).conj().T, atol=1e-14)

    def test_inverse_commutes_with_psi(self):
        rng = np.random.default_rng(5)
        X = random_mat(3, "H", rng)
        np.testing.assert_allclose(psi_matrix(mat_inverse(X)),
                                   np.linalg.inv(psi_matrix(X)), atol=1e-10)

    def test_image_structure(self):
        rng = np.random.default_rng(6)
        X = random_mat(3, "H", rng)
        assert psi_structural_residual(psi_matrix(X)) <= 1e-12

    def test_not_in_image(self):
        bad = np.diag([1.0, 2.0, 3.0, 4.0]).astype(complex)
        with pytest.raises(NotInImage):
            psi_inverse(bad)


class TestEig:
    def test_diagonal(self):
        dec = hermitian_eig(np.diag([3.0, 1.0]))
        np.testing.assert_allclose(dec.eigenvalues, [3.0, 1.0])
        np.testing.assert_allclose(np.abs(dec.unitary), np.eye(2), atol=1e-14)

    def test_pauli_like(self):
        dec = hermitian_eig(np.array([[0, 1j], [-1j, 0]]))
        np.testing.assert_allclose(dec.eigenvalues, [1.0, -1.0], atol=1e-14)

    def test_counterexample_ja(self):
        dec = hermitian_eig(np.array([[2.0, 1.0], [1.0, 2.0]]))
        np.testing.assert_allclose(dec.eigenvalues, [3.0, 1.0], atol=1e-14)

    def test_reconstruction_all_fields(self):
        rng = np.random.default_rng(7)
        for field in FIELDS:
            for n in (2, 3, 5):
                X = random_hermitian(n, field, rng)
                dec = hermitian_eig(X)
                assert fnorm(dec.reconstruct() - X) <= 1e-10 * max(1.0, fnorm(X))
                assert list(dec.eigenvalues) == sorted(dec.eigenvalues,
                                                       reverse=True)

    def test_quaternionic_unitary_factor(self):
        rng = np.random.default_rng(8)
        X = random_hermitian(4, "H", rng)
        dec = hermitian_eig(X)
        U = dec.unitary
        assert fnorm(U.H @ U - QMatrix.eye(4)) <= 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_eigvals_quaternionic_halved(self):
        X = QMatrix(np.diag([2.0, 5.0]).astype(complex))
        np.testing.assert_allclose(eigvals_hermitian(X), [5.0, 2.0], atol=1e-12)


class TestMatrixFunctions:
    def test_sqrt_diagonal(self):
        np.testing.assert_allclose(mat_sqrt_pd(np.diag([4.0, 9.0])),
                                   np.diag([2.0, 3.0]), atol=1e-12)

    def test_quarter_power(self):
        np.testing.assert_allclose(mat_pow_pd(np.diag([16.0, 81.0]), 0.25),
                                   np.diag([2.0, 3.0]), atol=1e-12)

    def test_exp_not_injective_witness(self):
        X = np.array([[0, 2j * np.pi], [2j * np.pi, 0]])
        np.testing.assert_allclose(expm(X), np.eye(2), atol=1e-10)

    def test_log_exp_round_trip(self):
        rng = np.random.default_rng(9)
        for field in FIELDS:
            H = random_hermitian(3, field, rng, radius=3.0)
            assert allclose(mat_log_pd(mat_exp_h(H)), H, tol=1e-9)

    def test_power_law(self):
        rng = np.random.default_rng(10)
        for field in FIELDS:
            X = mat_exp_h(random_hermitian(3, field, rng, radius=2.0))
            for _ in range(5):
                s, t = np.random.default_rng(11).uniform(-2, 2, 2)
                assert allclose(mat_pow_pd(mat_pow_pd(X, s), t),
                                mat_pow_pd(X, s * t), tol=1e-9)

    def test_commuting_product(self):
        rng = np.random.default_rng(12)
        for field in FIELDS:
            H = random_hermitian(3, field, rng, radius=1.5)
            X = mat_exp_h(H)
            Y = H @ H + 2.0 * identity(3, field)
            for s in (0.5, -1.0, 1.7):
                assert allclose(mat_pow_pd(X @ Y, s),
                                mat_pow_pd(X, s) @ mat_pow_pd(Y, s), tol=1e-9)

    def test_quaternionic_functional_calculus(self):
        rng = np.random.default_rng(13)
        X = mat_exp_h(random_hermitian(3, "H", rng, radius=2.0))
        for f in (np.exp, np.log, np.sqrt):
            lhs = psi_matrix(matrix_function(X, f))
            rhs = matrix_function(psi_matrix(X), f)
            assert np.linalg.norm(lhs - rhs) <= 1e-9 * max(1.0,
                                                           np.linalg.norm(rhs))

    def test_unitary_congruence(self):
        rng = np.random.default_rng(14)
        X = mat_exp_h(random_hermitian(3, "C", rng, radius=2.0))
        C, _ = np.linalg.qr(random_mat(3, "C", rng))
        for t in (0.5, 2.0, -0.3):
            assert allclose(mat_pow_pd(C @ X @ C.conj().T, t),
                            C @ mat_pow_pd(X, t) @ C.conj().T, tol=1e-9)

    def test_log_rejects_indefinite(self):
        with pytest.raises(NotPositive):
            mat_log_pd(np.diag([1.0, -1.0]))

    def test_boundary_rejected_not_clamped(self):
        with pytest.raises(NotPositive):
            mat_sqrt_pd(np.diag([1.0, 0.0]))


class TestPositivity:
    def test_identity(self):
        assert is_positive_definite(np.eye(3))

    def test_counterexample_ja(self):
        assert is_positive_definite(np.array([[2.0, 1.0], [1.0, 2.0]]))

    def test_swap_not_positive(self):
        assert not is_positive_definite(np.array([[0.0, 1.0], [1.0, 0.0]]))

    def test_quaternionic(self):
        rng = np.random.default_rng(15)
        X = mat_exp_h(random_hermitian(3, "H", rng, radius=1.0))
        assert is_positive_definite(X)
