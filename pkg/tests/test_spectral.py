"""Tests for analysis, synthesis and the sampled-signal fit."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.core import spectral
from src.core.quadrature import gauss_hermite, gauss_laguerre
from src.core.specfun import hermite_fn_matrix, laguerre_fn_matrix
from src.exceptions import BasisMismatchError, DomainError
from src.models.basis_models import Basis, CoeffVec, SampledSignal


def hermite_row(n):
    return lambda x: hermite_fn_matrix(n, x)[n]


class TestAnalyzeHermite:

    @pytest.mark.parametrize("n", [0, 3, 17])
    def test_recovers_unit_vector(self, n):
        c = spectral.analyze_hermite(hermite_row(n), 24, gauss_hermite(80))
        assert_allclose(c.values, np.eye(24)[n], atol=1e-12)

    def test_gaussian_energy(self):
        c = spectral.analyze_hermite(lambda x: np.exp(-0.5 * x * x), 40, gauss_hermite(112))
        assert c.values[0] == pytest.approx(math.pi ** 0.25, abs=1e-13)
        assert spectral.energy(c) == pytest.approx(math.sqrt(math.pi), rel=1e-12)

    def test_rejects_laguerre_rule(self):
        with pytest.raises(BasisMismatchError):
            spectral.analyze_hermite(hermite_row(0), 4, gauss_laguerre(10, 0.5))

    def test_rejects_zero_modes(self):
        with pytest.raises(DomainError):
            spectral.analyze_hermite(hermite_row(0), 0, gauss_hermite(10))

    def test_sampled_input(self):
        grid = np.arange(-12.0, 12.0 + 1e-9, 0.05)
        signal = SampledSignal.from_grid(grid, np.exp(-0.5 * grid * grid))
        rule = gauss_hermite(72)
        linear = spectral.analyze_hermite(signal, 8, rule)
        cubic = spectral.analyze_hermite(signal, 8, rule, interpolation="cubic")
        exact = math.pi ** 0.25
        assert abs(cubic.values[0] - exact) < 1e-5
        assert abs(linear.values[0] - exact) < 1e-2
        assert abs(cubic.values[0] - exact) <= abs(linear.values[0] - exact)

    def test_unknown_interpolation(self):
        signal = SampledSignal(0.0, 0.1, np.ones(10))
        with pytest.raises(DomainError):
            spectral.analyze_hermite(signal, 4, gauss_hermite(10), interpolation="quintic")


class TestAnalysisProperties:

    @pytest.mark.parametrize("alpha,beta", [(1.0, 1.0), (2.5, -0.75), (1j, 0.5 - 2j)])
    def test_linearity(self, alpha, beta):
        rule = gauss_hermite(96)
        f = lambda x: np.exp(-0.5 * x * x) * np.cos(x)
        g = lambda x: x * np.exp(-0.3 * x * x)
        combined = spectral.analyze_hermite(lambda x: alpha * f(x) + beta * g(x), 40, rule)
        separate = alpha * spectral.analyze_hermite(f, 40, rule).values
        separate = separate + beta * spectral.analyze_hermite(g, 40, rule).values
        assert_allclose(combined.values, separate, atol=1e-12)

    def test_gaussian_cosine_tail_decays(self):
        c = spectral.analyze_hermite(lambda x: np.exp(-0.5 * x * x) * np.cos(x), 40, gauss_hermite(112))
        assert abs(c.values[39]) < 1e-8
        assert np.max(np.abs(c.values[30:])) < 1e-8
        # parity: odd coefficients of an even function vanish
        assert np.max(np.abs(c.values[1::2])) < 1e-13

    def test_laguerre_linearity(self):
        rule = gauss_laguerre(64, 0.5)
        f = lambda y: np.sqrt(y) * np.exp(-y)
        g = lambda y: y * np.exp(-0.5 * y)
        combined = spectral.analyze_laguerre(lambda y: 3.0 * f(y) - 2.0 * g(y), 24, 0.5, rule)
        separate = 3.0 * spectral.analyze_laguerre(f, 24, 0.5, rule).values
        separate = separate - 2.0 * spectral.analyze_laguerre(g, 24, 0.5, rule).values
        assert_allclose(combined.values, separate, atol=1e-12)


class TestLaguerreAnalysis:

    @pytest.mark.parametrize("alpha", [-0.5, 0.5])
    def test_recovers_unit_vector(self, alpha):
        f = lambda y: laguerre_fn_matrix(2, alpha, y)[2]
        c = spectral.analyze_laguerre(f, 10, alpha, gauss_laguerre(40, alpha))
        assert c.basis == Basis.laguerre(alpha)
        assert_allclose(c.values, np.eye(10)[2], atol=1e-12)

    def test_rule_alpha_must_match(self):
        with pytest.raises(BasisMismatchError):
            spectral.analyze_laguerre(lambda y: y, 4, 0.5, gauss_laguerre(10, -0.5))


class TestSynthesis:

    def test_synthesize_hermite(self, rng):
        c = CoeffVec(Basis.hermite(), rng.standard_normal(12))
        grid = np.linspace(-5.0, 5.0, 101)
        out = spectral.synthesize_hermite(c, grid)
        assert_allclose(out.grid, grid, atol=1e-12)
        assert_allclose(out.values, c.values @ hermite_fn_matrix(11, grid), atol=1e-13)

    def test_analysis_inverts_synthesis(self, rng):
        c = CoeffVec(Basis.hermite(), rng.standard_normal(20) + 1j * rng.standard_normal(20))
        back = spectral.analyze_hermite(lambda x: spectral.evaluate(c, x), 20, gauss_hermite(72))
        assert_allclose(back.values, c.values, atol=1e-12)

    def test_laguerre_dispatch(self):
        c = CoeffVec.unit(Basis.laguerre(0.5), 4, 1)
        grid = np.linspace(0.0, 10.0, 21)
        assert_allclose(spectral.synthesize(c, grid).values, laguerre_fn_matrix(1, 0.5, grid)[1], atol=1e-15)

    def test_wrong_basis(self):
        with pytest.raises(BasisMismatchError):
            spectral.synthesize_laguerre(CoeffVec.zeros(Basis.hermite(), 3), [0.0, 1.0])

    def test_empty_vector_synthesizes_zero(self):
        out = spectral.evaluate(CoeffVec.zeros(Basis.hermite(), 0), [0.0, 1.0])
        assert np.array_equal(out, np.zeros(2))


class TestInnerProduct:

    def test_conjugate_linear_in_first_argument(self):
        c = CoeffVec(Basis.hermite(), [1j, 2.0])
        d = CoeffVec(Basis.hermite(), [1.0, 1.0])
        assert spectral.inner_product(c, d) == pytest.approx(2.0 - 1j)

    def test_mismatched_basis(self):
        with pytest.raises(BasisMismatchError):
            spectral.inner_product(CoeffVec.zeros(Basis.hermite(), 2), CoeffVec.zeros(Basis.laguerre(0.5), 2))

    def test_mismatched_length(self):
        with pytest.raises(BasisMismatchError):
            spectral.inner_product(CoeffVec.zeros(Basis.hermite(), 2), CoeffVec.zeros(Basis.hermite(), 3))


class TestFit:

    def test_hermite_fit_recovers_span(self):
        grid = np.linspace(-10.0, 10.0, 801)
        values = hermite_fn_matrix(7, grid)[2] + 0.5 * hermite_fn_matrix(7, grid)[7]
        c = spectral.fit_hermite(SampledSignal.from_grid(grid, values), 16)
        expected = np.zeros(16)
        expected[[2, 7]] = [1.0, 0.5]
        assert_allclose(c.values, expected, atol=1e-10)

    def test_laguerre_fit_drops_singular_sample(self):
        grid = np.linspace(0.0, 40.0, 801)
        rows = laguerre_fn_matrix(5, -0.5, grid[1:])
        values = np.concatenate([[0.0], rows[1] - 2.0 * rows[4]])
        c = spectral.fit_laguerre(SampledSignal.from_grid(grid, values), 8, -0.5)
        expected = np.zeros(8)
        expected[[1, 4]] = [1.0, -2.0]
        assert_allclose(c.values, expected, atol=1e-9)

    def test_laguerre_fit_rejects_negative_grid(self):
        signal = SampledSignal(-1.0, 0.1, np.ones(30))
        with pytest.raises(DomainError):
            spectral.fit_laguerre(signal, 4, 0.5)
