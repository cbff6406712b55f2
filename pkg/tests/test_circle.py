"""Tests for periodized Hermite functions, the Gram matrix and circle Fourier series."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.core import circle
from src.core.specfun import hermite_fn, hermite_fn_matrix
from src.exceptions import AliasingError, DependenceError, DomainError, ResourceError


class TestWrapSum:

    def test_wrap_radius(self):
        assert circle.wrap_radius(0, 1e-12) == 2
        assert circle.wrap_radius(200, 1e-12) >= circle.wrap_radius(10, 1e-12)

    def test_wrap_radius_rejects_bad_tolerance(self):
        with pytest.raises(DomainError):
            circle.wrap_radius(1, 0.0)

    @pytest.mark.parametrize("n", [0, 1, 4, 10, 20])
    def test_direct_matches_fourier_series(self, n):
        phi = np.linspace(-math.pi, math.pi, 50, endpoint=False)
        direct = circle.periodized_hermite_direct(n, phi)
        series = circle.periodized_hermite_fourier(n, phi, 30)
        assert_allclose(direct, series, atol=1e-8)

    def test_periodic(self):
        phi = np.linspace(-3.0, 3.0, 13)
        assert_allclose(
            circle.periodized_hermite_direct(3, phi + 2 * math.pi),
            circle.periodized_hermite_direct(3, phi),
            atol=1e-13,
        )

    def test_scalar_in_scalar_out(self):
        value = circle.periodized_hermite_direct(0, 0.0)
        assert isinstance(value, float)
        # the ground state barely overlaps its neighbours at +-2 pi
        assert value == pytest.approx(hermite_fn(0, 0.0), abs=1e-8)


class TestCircleCoefficients:

    def test_coefficients_are_hermite_samples(self):
        c = circle.circle_fourier_coeffs(3, 5)
        assert c.cutoff == 5
        assert c.coefficient(2) == pytest.approx((1j) ** 3 * hermite_fn(3, 2.0))
        assert c.coefficient(9) == 0

    def test_chi_seq(self):
        seq = circle.chi_seq(2, 30)
        assert seq.at(0) == hermite_fn(2, 0.0)
        assert seq.tail < 1e-14
        assert seq.norm_squared() == pytest.approx(np.sum(hermite_fn_matrix(2, np.arange(-30, 31))[2] ** 2))

    def test_chi_seq_warns_on_heavy_tail(self, caplog):
        with caplog.at_level("WARNING"):
            circle.chi_seq(0, 1)
        assert "tail" in caplog.text

    def test_rejects_bad_cutoff(self):
        with pytest.raises(DomainError):
            circle.chi_seq(1, 0)


class TestGram:

    def test_hermitian_with_chi_norms_on_diagonal(self):
        gram = circle.gram_matrix(8, 30)
        assert_allclose(gram, gram.conj().T, atol=1e-14)
        for n in range(8):
            assert gram[n, n].real == pytest.approx(circle.chi_seq(n, 30).norm_squared(), rel=1e-14)

    def test_opposite_parity_entries_vanish(self):
        gram = circle.gram_matrix(6, 30)
        assert abs(gram[0, 1]) < 1e-15
        assert abs(gram[2, 5]) < 1e-15

    def test_matches_direct_inner_products(self):
        gram = circle.gram_matrix(6, 30)
        for n in range(6):
            for m in range(n, 6):
                direct = circle.circle_inner_product(
                    lambda phi: circle.periodized_hermite_direct(n, phi),
                    lambda phi: circle.periodized_hermite_direct(m, phi),
                    128,
                )
                assert direct == pytest.approx(gram[n, m], abs=1e-8)

    def test_condition_number(self):
        cond = circle.gram_condition_number(circle.gram_matrix(6, 30))
        assert 1.0 <= cond < 1e6


class TestGramSchmidt:

    def test_orthonormal_output(self, rng):
        vectors = rng.standard_normal((5, 9)) + 1j * rng.standard_normal((5, 9))
        q = np.array(circle.gram_schmidt(vectors))
        assert_allclose(q.conj() @ q.T, np.eye(5), atol=1e-13)

    def test_dependent_vector_is_reported(self):
        v, w = np.array([1.0, 0.0, 1.0]), np.array([0.0, 2.0, 1.0])
        with pytest.raises(DependenceError) as info:
            circle.gram_schmidt([v, w, 3 * v - w])
        assert info.value.index == 2

    def test_zero_vector_is_dependent(self):
        with pytest.raises(DependenceError):
            circle.gram_schmidt([np.zeros(3)])

    def test_chi_sequences(self):
        q = np.array(circle.chi_gram_schmidt(10, 30))
        assert_allclose(q.conj() @ q.T, np.eye(10), atol=1e-12)


class TestIntegerDeterminants:

    def test_full_example(self):
        assert circle.hermite_integer_det(1, "full") == 16

    def test_half_example(self):
        assert circle.hermite_integer_det(1, "half") == 2

    @pytest.mark.parametrize("mode", ["full", "half"])
    @pytest.mark.parametrize("N", [0, 1, 2, 3, 4, 5])
    def test_matches_vandermonde_and_is_nonzero(self, N, mode):
        det = circle.hermite_integer_det(N, mode)
        assert det != 0
        assert det == circle.hermite_vandermonde_det(N, mode)

    def test_order_limit(self, monkeypatch):
        monkeypatch.setenv("MAX_DET_ORDER", "2")
        with pytest.raises(ResourceError):
            circle.hermite_integer_det(3)

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            circle.hermite_integer_det(2, "quarter")


class TestFourierSeries:

    def test_single_harmonic(self):
        c = circle.fourier_series_analyze(lambda phi: np.exp(-3j * phi), 5, 16)
        expected = np.zeros(11, dtype=complex)
        expected[3 + 5] = math.sqrt(2 * math.pi)
        assert_allclose(c.coeffs, expected, atol=1e-12)

    def test_positive_frequency_lands_on_negative_order(self):
        c = circle.fourier_series_analyze(lambda phi: np.exp(3j * phi), 5, 16)
        assert c.coefficient(-3) == pytest.approx(math.sqrt(2 * math.pi))
        assert abs(c.coefficient(3)) < 1e-12

    def test_aliasing_guard(self):
        with pytest.raises(AliasingError):
            circle.fourier_series_analyze(lambda phi: phi, 5, 10)

    def test_synthesis_inverts_analysis(self):
        f = lambda phi: 1.0 + 0.5 * np.cos(2 * phi) - 0.25j * np.sin(phi)
        c = circle.fourier_series_analyze(f, 4, 32)
        phi = np.linspace(-math.pi, math.pi, 17)
        assert_allclose(circle.fourier_series_synthesize(c, phi), f(phi), atol=1e-13)

    def test_unitarity(self):
        f = lambda phi: np.exp(-1j * phi) + 2.0 * np.exp(2j * phi)
        c = circle.fourier_series_analyze(f, 3, 24)
        assert c.norm_squared() == pytest.approx(circle.circle_inner_product(f, f, 24).real, rel=1e-13)
        assert c.norm_squared() == pytest.approx(5.0 * 2 * math.pi, rel=1e-13)
