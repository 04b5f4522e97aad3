import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kangle.analysis import check_tight, coherence
from kangle.etf import (
    etf_fast_path,
    etf_via_eig,
    fast_path_row,
    gram_from_signature,
    signature_from_seed,
    simplex_etf,
    verify_signature_identity,
)
from kangle.linalg import conj_transpose, frobenius_distance, hermitian_eig
from golden_values import FRAME_4_3, FRAME_6_5, GRAM_4_3, GRAM_6_5, SEED_4_3, SEED_6_5


def real_seeds(max_len=40):
    return st.lists(st.sampled_from([-1.0, 1.0]), min_size=2, max_size=max_len).map(np.array)


def complex_seeds(max_len=24):
    phases = st.floats(0, 2 * np.pi, allow_nan=False)
    return st.lists(phases, min_size=2, max_size=max_len).map(lambda p: np.exp(1j * np.array(p)))


def test_printed_frames_have_printed_grams():
    # sanity check on the transcription itself
    f = FRAME_6_5
    assert frobenius_distance(f @ f.T, GRAM_6_5) < 1e-14
    w = FRAME_4_3
    assert frobenius_distance(w @ w.conj().T, GRAM_4_3) < 1e-14


class TestSignature:
    def test_real_6_5(self):
        q = signature_from_seed(SEED_6_5)
        assert q[0, 1] == -1 and q[0, 2] == 1
        assert np.all(np.diag(q) == 0)
        assert frobenius_distance(gram_from_signature(q, 5), GRAM_6_5) < 1e-15

    def test_complex_4_3(self):
        g = gram_from_signature(signature_from_seed(SEED_4_3), 3)
        assert g[0, 1] == pytest.approx(1j / 3, abs=1e-15)
        assert g[0, 2] == pytest.approx(1 / 3, abs=1e-15)
        assert g[0, 3] == pytest.approx(-1j / 3, abs=1e-15)
        assert frobenius_distance(g, GRAM_4_3) < 1e-15

    def test_two_by_two(self):
        assert np.array_equal(signature_from_seed([1, 1]), [[0, -1], [-1, 0]])

    def test_rejects_non_unimodular(self):
        with pytest.raises(ValueError, match="unimodular"):
            signature_from_seed([1, 0.5, 1])
        with pytest.raises(ValueError):
            signature_from_seed([1])

    def test_gram_d1(self):
        g = gram_from_signature(np.array([[0.0, -1.0], [-1.0, 0.0]]), 1)
        assert np.array_equal(g, [[1, -1], [-1, 1]])
        np.testing.assert_allclose(hermitian_eig(g).values, [2, 0], atol=1e-15)

    def test_gram_size_mismatch(self):
        with pytest.raises(ValueError):
            gram_from_signature(np.zeros((3, 3)), 3)

    def test_gram_eigenvalues(self):
        g = gram_from_signature(signature_from_seed(SEED_4_3), 3)
        np.testing.assert_allclose(hermitian_eig(g).values, [4 / 3] * 3 + [0], atol=1e-12)


class TestSignatureIdentity:
    def test_golden_seed_exact(self):
        assert verify_signature_identity(signature_from_seed(SEED_6_5), 5).residual == 0.0

    def test_random_seed(self, rng):
        x = rng.choice([-1.0, 1.0], size=8)
        assert verify_signature_identity(signature_from_seed(x), 7).passed

    def test_perturbation_fails(self):
        q = signature_from_seed(SEED_6_5)
        q[0, 3] = q[3, 0] = 0.0
        assert not verify_signature_identity(q, 5).passed


class TestEigPath:
    def test_real_6_5(self):
        f = etf_via_eig(SEED_6_5)
        assert (f.d, f.n, f.field) == (5, 6, "real")
        np.testing.assert_allclose(f.norms(), 1, atol=1e-12)
        assert frobenius_distance(f.gram(), GRAM_6_5) < 1e-12

    def test_complex_4_3(self):
        f = etf_via_eig(SEED_4_3)
        assert (f.d, f.n, f.field) == (3, 4, "complex")
        assert frobenius_distance(f.gram(), GRAM_4_3) < 1e-12

    def test_one_dimensional(self):
        f = etf_via_eig([1, 1])
        assert f.d == 1
        np.testing.assert_allclose(np.abs(f.matrix), [[1, 1]], atol=1e-15)
        assert f.matrix[0, 0] * f.matrix[0, 1] == pytest.approx(-1)


class TestFastPath:
    def test_reproduces_printed_6_5_frame(self):
        assert frobenius_distance(etf_fast_path(SEED_6_5).vectors, FRAME_6_5) < 1e-15

    @pytest.mark.parametrize("d", range(2, 11))
    def test_all_ones_is_simplex(self, d):
        g = etf_fast_path(np.ones(d + 1)).gram()
        off = g[~np.eye(d + 1, dtype=bool)]
        np.testing.assert_allclose(off, -1 / d, atol=1e-14)

    def test_two_vectors_match_eig(self):
        assert frobenius_distance(etf_fast_path([1, 1]).gram(), etf_via_eig([1, 1]).gram()) < 1e-12

    def test_complex_4_3(self):
        assert frobenius_distance(etf_fast_path(SEED_4_3).gram(), GRAM_4_3) < 1e-12

    @settings(max_examples=30)
    @given(x=complex_seeds())
    def test_complex_eigenvectors(self, x):
        # columns y_j are orthogonal to x and eigenvectors of Q for eigenvalue 1
        d = x.size - 1
        q = signature_from_seed(x)
        j = np.arange(1, d + 1)
        c = np.sqrt((d + 1) / d) * np.sqrt(j / (j + 1))
        v = np.stack([fast_path_row(x, i) for i in range(d + 1)])
        y = v / c
        assert np.max(np.abs(conj_transpose(x[:, None]) @ y)) < 1e-12
        assert np.max(np.abs(q @ y - y)) < 1e-12

    def test_simplex_helper(self):
        f = simplex_etf(4)
        assert f.metadata["construction"] == "simplex"
        np.testing.assert_allclose(f.gram() @ np.ones(5), 0, atol=1e-14)


@settings(max_examples=40)
@given(x=st.one_of(real_seeds(), complex_seeds()))
def test_routes_agree_and_attain_welch(x):
    d = x.size - 1
    fast, slow = etf_fast_path(x), etf_via_eig(x)
    assert frobenius_distance(fast.gram(), slow.gram()) <= 1e-9
    q = signature_from_seed(x)
    np.testing.assert_allclose(q @ x, -d * x, atol=1e-12)
    g = gram_from_signature(q, d)
    np.testing.assert_allclose(g @ x, 0, atol=1e-12)
    for f in (fast, slow):
        assert abs(coherence(f) - 1 / d) <= 1e-10
        tight = check_tight(f)
        assert frobenius_distance(f.frame_operator(), (d + 1) / d * np.eye(d)) <= 1e-9
        assert tight.is_tight and tight.frame_bound == pytest.approx((d + 1) / d, abs=1e-12)
