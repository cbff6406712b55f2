"""Tests for ladder operators, the Q/R labelling and the su(1,1) algebra."""
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from src.core import algebra
from src.core.algebra import LadderDirection, OscillatorOp, Su11Op
from src.core.quadrature import gauss_hermite, gauss_laguerre
from src.core.spectral import evaluate
from src.exceptions import BasisMismatchError, ContractViolationError, DomainError
from src.models.basis_models import Basis, CoeffVec


def unit(n, size=16, basis=None):
    return CoeffVec.unit(basis or Basis.hermite(), size, n)


class TestOscillator:

    def test_annihilation(self):
        out = algebra.oscillator_apply(OscillatorOp.A, unit(3))
        assert_allclose(out.values, math.sqrt(3) * np.eye(16)[2])

    def test_annihilation_kills_ground_state(self):
        assert np.array_equal(algebra.oscillator_apply(OscillatorOp.A, unit(0)).values, np.zeros(16))

    def test_creation(self):
        out = algebra.oscillator_apply(OscillatorOp.ADAG, unit(3))
        assert_allclose(out.values, 2.0 * np.eye(16)[4])

    def test_number_operator_is_adag_a(self):
        for n in range(10):
            out = algebra.oscillator_apply(OscillatorOp.NUM, unit(n))
            assert_allclose(out.values, n * np.eye(16)[n])

    def test_creation_truncates_at_top(self):
        out = algebra.oscillator_apply(OscillatorOp.ADAG, unit(15))
        assert np.array_equal(out.values, np.zeros(16))

    @pytest.mark.parametrize("op", ["X", "P"])
    def test_position_momentum_are_hermitian(self, op, rng):
        c = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        d = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        built = algebra.position() if op == "X" else algebra.momentum()
        assert algebra.adjoint_defect(built, built, c, d) < 1e-12

    def test_position_is_multiplication_by_x(self):
        c = CoeffVec(Basis.hermite(), [0.2, -1.0, 0.5, 0.0, 0.3, 0.0])
        padded = c.with_values(np.append(c.values, 0.0))
        x = np.linspace(-4.0, 4.0, 17)
        algebraic = evaluate(algebra.oscillator_apply(OscillatorOp.X, padded), x)
        assert_allclose(algebraic, x * evaluate(c, x), atol=1e-13)

    def test_annihilation_adjoint_is_creation(self, rng):
        c = rng.standard_normal(20)
        d = rng.standard_normal(20)
        assert algebra.adjoint_defect(algebra.annihilation(), algebra.creation(), c, d) < 1e-12

    def test_requires_hermite_basis(self):
        with pytest.raises(BasisMismatchError):
            algebra.oscillator_apply(OscillatorOp.A, unit(1, basis=Basis.laguerre(0.5)))

    def test_matrix_matches_apply(self, rng):
        op = algebra.momentum()
        v = rng.standard_normal(12)
        assert_allclose(op.matrix(12) @ v, op.apply(v), atol=1e-14)


class TestCommutators:

    def test_canonical_commutator(self):
        residual = algebra.commutator_residual(algebra.annihilation(), algebra.creation(), algebra.identity(), 64, 2)
        assert residual < 1e-14

    def test_number_and_ladders(self):
        a, ad, num = algebra.annihilation(), algebra.creation(), algebra.number()
        assert algebra.commutator_residual(num, a, algebra.scaled(a, -1.0), 64, 2) < 1e-14
        assert algebra.commutator_residual(num, ad, ad, 64, 2) < 1e-14

    def test_position_momentum(self):
        expected = algebra.scaled(algebra.identity(), 1j)
        assert algebra.commutator_residual(algebra.position(), algebra.momentum(), expected, 64, 2) < 1e-14

    def test_wrong_expectation_is_detected(self):
        residual = algebra.commutator_residual(algebra.annihilation(), algebra.creation(), algebra.number(), 32, 2)
        assert residual > 0.1

    def test_residual_is_relative_to_the_products(self):
        # defect column n is -delta*n e_n against ||a a^+ e_n|| + ||a^+ a e_n|| = 2n + 1
        delta = 1e-3
        expected = algebra.sum_op(algebra.identity(), algebra.scaled(algebra.number(), delta))
        residual = algebra.commutator_residual(algebra.annihilation(), algebra.creation(), expected, 8, 2)
        assert residual == pytest.approx(5 * delta / 11, rel=1e-12)

    @pytest.mark.parametrize("alpha", [-0.5, 0.5])
    def test_su11_closure_at_large_truncation(self, alpha):
        jp, jm, j3 = algebra.su11_raise(alpha), algebra.su11_lower(alpha), algebra.su11_j3(alpha)
        assert algebra.commutator_residual(jp, jm, algebra.scaled(j3, -2.0), 96, 2) < 1e-12

    def test_margin_below_reach_is_a_contract_violation(self):
        with pytest.raises(ContractViolationError):
            algebra.commutator_residual(algebra.annihilation(), algebra.creation(), algebra.identity(), 64, 1)

    def test_margin_must_leave_interior(self):
        with pytest.raises(ContractViolationError):
            algebra.commutator_residual(algebra.annihilation(), algebra.creation(), algebra.identity(), 4, 4)


class TestQRLabels:

    @pytest.mark.parametrize("k,n,q,r", [(4, 11, 2, 3), (1, 7, 7, 0), (3, 0, 0, 0), (5, 24, 4, 4)])
    def test_split(self, k, n, q, r):
        label = algebra.qr_split(k, n)
        assert (label.q, label.r) == (q, r)
        assert label.n == n

    @pytest.mark.parametrize("k,n", [(0, 3), (2, -1)])
    def test_split_domain(self, k, n):
        with pytest.raises(DomainError):
            algebra.qr_split(k, n)

    def test_q_and_r_operators_label_every_index(self):
        k = 3
        q = algebra.q_operator(k).matrix(10).diagonal().real
        r = algebra.r_operator(k).matrix(10).diagonal().real
        assert np.array_equal(k * q + r, np.arange(10))

    def test_q_and_r_apply(self):
        c = CoeffVec(Basis.hermite(), np.ones(8))
        assert np.array_equal(algebra.q_apply(3, c).values, [0, 0, 0, 1, 1, 1, 2, 2])
        assert np.array_equal(algebra.r_apply(3, c).values, [0, 1, 2, 0, 1, 2, 0, 1])

    def test_q_operator_domain(self):
        with pytest.raises(DomainError):
            algebra.q_operator(0)

    def test_sum_of_q_and_r_recovers_number(self):
        k = 4
        combined = algebra.sum_op(algebra.scaled(algebra.q_operator(k), k), algebra.r_operator(k))
        assert_allclose(combined.matrix(12), algebra.number().matrix(12))


class TestSubspaceLadders:

    def test_raise_within_subspace(self):
        out = algebra.subspace_ladder_apply(3, 2, LadderDirection.RAISE, unit(5, 12))
        assert_allclose(out.values, math.sqrt(2) * np.eye(12)[8])

    def test_lower_within_subspace(self):
        out = algebra.subspace_ladder_apply(3, 2, LadderDirection.LOWER, unit(5, 12))
        assert_allclose(out.values, np.eye(12)[2])

    @pytest.mark.parametrize("k,r", [(1, 0), (2, 0), (2, 1), (3, 1), (4, 3), (5, 2)])
    def test_raise_and_lower_are_adjoint(self, k, r, rng):
        size = 30
        c = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        d = rng.standard_normal(size) + 1j * rng.standard_normal(size)
        c[size - k:] = 0.0
        d[size - k:] = 0.0
        defect = algebra.adjoint_defect(algebra.subspace_raise(k, r), algebra.subspace_lower(k, r), c, d)
        assert defect < 1e-13

    def test_off_subspace_is_annihilated(self):
        for direction in LadderDirection:
            out = algebra.subspace_ladder_apply(3, 2, direction, unit(4, 12))
            assert np.array_equal(out.values, np.zeros(12))

    @pytest.mark.parametrize("k,r", [(1, 0), (2, 1), (3, 0), (4, 3)])
    def test_su2_like_relations(self, k, r):
        up, down = algebra.subspace_raise(k, r), algebra.subspace_lower(k, r)
        size, margin = 80, 2 * k
        assert algebra.commutator_residual(down, up, algebra.subspace_identity(k, r), size, margin) < 1e-13
        q = algebra.q_operator(k)
        assert algebra.commutator_residual(q, up, up, size, margin) < 1e-13
        assert algebra.commutator_residual(q, down, algebra.scaled(down, -1.0), size, margin) < 1e-13

    @pytest.mark.parametrize("direction", list(LadderDirection))
    @pytest.mark.parametrize("k,r", [(2, 0), (3, 1), (4, 2)])
    def test_ratio_form_matches_action_form(self, k, r, direction, rng):
        size = 48
        values = np.where(np.arange(size) % k == r, rng.standard_normal(size), 0.0)
        values[size - 2 * k:] = 0.0
        c = CoeffVec(Basis.hermite(), values)
        action = algebra.subspace_ladder_apply(k, r, direction, c)
        ratio = algebra.ladder_ratio_form_apply(k, r, direction, c)
        assert_allclose(ratio.values, action.values, atol=1e-12)

    def test_rejects_bad_residue(self):
        with pytest.raises(DomainError):
            algebra.subspace_raise(3, 3)


class TestSu11:

    def test_raise_ground_state(self):
        out = algebra.su11_apply(Su11Op.JPLUS, unit(0, 8, Basis.laguerre(0.5)))
        assert out.values[1].real == pytest.approx(1.2247449, abs=1e-7)

    def test_lower_ground_state(self):
        out = algebra.su11_apply(Su11Op.JMINUS, unit(0, 8, Basis.laguerre(0.5)))
        assert np.array_equal(out.values, np.zeros(8))

    def test_j3_eigenvalues(self):
        out = algebra.su11_apply(Su11Op.J3, unit(4, 8, Basis.laguerre(-0.5)))
        assert out.values[4].real == pytest.approx(4.25)

    @pytest.mark.parametrize("alpha,expected", [(0.5, -0.1875), (-0.5, -0.1875), (0.0, -0.25), (2.0, 0.75)])
    def test_casimir(self, alpha, expected):
        for n in range(20):
            c = unit(n, 24, Basis.laguerre(alpha))
            assert_allclose(algebra.casimir_su11(alpha, c).values, expected * c.values, atol=1e-12)

    @pytest.mark.parametrize("alpha", [-0.5, 0.5, 3.0])
    def test_commutation_relations(self, alpha):
        jp, jm, j3 = algebra.su11_raise(alpha), algebra.su11_lower(alpha), algebra.su11_j3(alpha)
        assert algebra.commutator_residual(j3, jp, jp, 64, 2) < 1e-12
        assert algebra.commutator_residual(j3, jm, algebra.scaled(jm, -1.0), 64, 2) < 1e-12
        assert algebra.commutator_residual(jp, jm, algebra.scaled(j3, -2.0), 64, 2) < 1e-12

    def test_requires_laguerre_basis(self):
        with pytest.raises(BasisMismatchError):
            algebra.su11_apply(Su11Op.J3, unit(0))

    def test_casimir_alpha_must_match(self):
        with pytest.raises(BasisMismatchError):
            algebra.casimir_su11(0.5, unit(0, 4, Basis.laguerre(-0.5)))

    @pytest.mark.parametrize("alpha", [-0.5, 0.5])
    def test_y_operator_is_multiplication(self, alpha):
        c = CoeffVec(Basis.laguerre(alpha), [0.3, 1.0, -0.5, 0.25, 0.0, 0.1])
        assert algebra.y_operator_check(alpha, c, gauss_laguerre(64, alpha)) < 1e-9
