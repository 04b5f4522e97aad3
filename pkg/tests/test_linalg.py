import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kangle.linalg import (
    ConvergenceError,
    conj_transpose,
    frobenius_distance,
    hermitian_eig,
    matmul,
)


def enumerate_binary_columns(length, ones):
    # brute force over all 2^length binary vectors, independent of itertools.combinations
    cols = [v for v in itertools.product((0, 1), repeat=length) if sum(v) == ones]
    return np.array(cols, dtype=np.int64).T


def random_hermitian(rng, n, complex_):
    a = rng.normal(size=(n, n))
    if complex_:
        a = a + 1j * rng.normal(size=(n, n))
    return a + conj_transpose(a)


class TestMatmul:
    def test_identity(self, rng):
        a = rng.normal(size=(3, 4))
        assert np.array_equal(matmul(np.eye(3), a), a)

    def test_all_ones_square(self):
        j = np.ones((2, 2))
        assert np.array_equal(matmul(j, j), 2 * j)

    def test_incidence_gram_by_enumeration(self):
        K = enumerate_binary_columns(4, 2)
        assert K.shape == (4, 6)
        kkt = matmul(K, K.T)
        assert kkt.dtype.kind == "i"
        assert np.array_equal(kkt, 2 * np.eye(4, dtype=int) + np.ones((4, 4), dtype=int))

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            matmul(np.ones((2, 3)), np.ones((2, 3)))

    def test_deterministic_bits(self, rng):
        a = rng.normal(size=(17, 23)) + 1j * rng.normal(size=(17, 23))
        b = rng.normal(size=(23, 5)) + 1j * rng.normal(size=(23, 5))
        assert matmul(a, b).tobytes() == matmul(a.copy(), b.copy()).tobytes()

    def test_matches_numpy(self, rng):
        a = rng.normal(size=(6, 7))
        b = rng.normal(size=(7, 3))
        np.testing.assert_allclose(matmul(a, b), a @ b, atol=1e-13)

    def test_real_stays_real(self, rng):
        assert matmul(rng.normal(size=(2, 2)), np.eye(2)).dtype == np.float64


class TestConjTranspose:
    def test_real_symmetric(self):
        a = np.array([[1.0, 2.0], [2.0, 5.0]])
        assert np.array_equal(conj_transpose(a), a)

    def test_scalar_i(self):
        assert conj_transpose(np.array([[1j]]))[0, 0] == -1j

    def test_complex_seed_column(self):
        x = np.array([[1], [1j], [-1], [-1j]])
        assert np.array_equal(conj_transpose(x), np.array([[1, -1j, -1, 1j]]))


class TestFrobenius:
    def test_zero(self, rng):
        a = rng.normal(size=(3, 3))
        assert frobenius_distance(a, a) == 0.0

    def test_identity_vs_zero(self):
        assert frobenius_distance(np.eye(2), np.zeros((2, 2))) == pytest.approx(np.sqrt(2), abs=1e-15)

    def test_kkt_identity(self):
        K = enumerate_binary_columns(4, 2)
        assert frobenius_distance(2 * np.eye(4) + np.ones((4, 4)), matmul(K, K.T)) == 0.0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            frobenius_distance(np.eye(2), np.eye(3))


class TestHermitianEig:
    def test_diagonal(self):
        eig = hermitian_eig(np.diag([3.0, 1.0, 2.0]))
        assert np.array_equal(eig.values, [3.0, 2.0, 1.0])
        assert np.array_equal(np.abs(eig.vectors), np.eye(3)[:, [0, 2, 1]])

    def test_swap(self):
        eig = hermitian_eig(np.array([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(eig.values, [1.0, -1.0], atol=1e-15)

    def test_etf_gram(self):
        x = np.array([1, 1, -1, 1, -1, 1.0])
        g = np.eye(6) + (np.eye(6) - np.outer(x, x)) / 5
        eig = hermitian_eig(g)
        np.testing.assert_allclose(eig.values, [1.2] * 5 + [0.0], atol=1e-12)

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(ValueError, match="Hermitian"):
            hermitian_eig(np.array([[1.0, 1j], [1j, 1.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            hermitian_eig(np.ones((2, 3)))

    def test_sweep_cap_is_explicit(self, rng):
        with pytest.raises(ConvergenceError):
            hermitian_eig(random_hermitian(rng, 6, True), max_sweeps=1)

    def test_deterministic(self, rng):
        a = random_hermitian(rng, 20, True)
        e1, e2 = hermitian_eig(a), hermitian_eig(a.copy())
        assert e1.values.tobytes() == e2.values.tobytes()
        assert e1.vectors.tobytes() == e2.vectors.tobytes()

    def test_real_input_gives_real_vectors(self, rng):
        assert hermitian_eig(random_hermitian(rng, 5, False)).vectors.dtype == np.float64

    @settings(max_examples=40)
    @given(n=st.integers(1, 64), complex_=st.booleans(), seed=st.integers(0, 2**32 - 1))
    def test_reconstruction_and_trace(self, n, complex_, seed):
        a = random_hermitian(np.random.default_rng(seed), n, complex_)
        eig = hermitian_eig(a)
        norm = np.linalg.norm(a)
        assert frobenius_distance(eig.reconstruct(), a) <= 1e-9 * max(1.0, norm)
        assert abs(np.trace(a).real - eig.values.sum()) <= 1e-9 * max(1.0, norm)
        u = eig.vectors
        assert frobenius_distance(conj_transpose(u) @ u, np.eye(n)) <= 1e-10
        resid = np.abs(a @ u - u * eig.values).max()
        assert resid <= 1e-10 * max(1.0, norm)
        assert np.all(np.diff(eig.values) <= 0)
        # independent oracle: LAPACK
        np.testing.assert_allclose(eig.values, np.linalg.eigvalsh(a)[::-1], atol=1e-10 * max(1.0, norm))

    @settings(max_examples=25)
    @given(n=st.integers(2, 30), complex_=st.booleans(), seed=st.integers(0, 2**32 - 1))
    def test_permutation_stable(self, n, complex_, seed):
        rng = np.random.default_rng(seed)
        a = random_hermitian(rng, n, complex_)
        perm = rng.permutation(n)
        shuffled = a[np.ix_(perm, perm)]
        inv = np.argsort(perm)
        unshuffled = shuffled[np.ix_(inv, inv)]
        np.testing.assert_allclose(hermitian_eig(unshuffled).values, hermitian_eig(a).values, atol=1e-10)
        np.testing.assert_allclose(hermitian_eig(shuffled).values, hermitian_eig(a).values, atol=1e-10)
