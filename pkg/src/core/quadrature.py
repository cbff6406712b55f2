"""Gauss-Hermite and Gauss-Laguerre rules with the classical weight folded in.

Nodes come from the symmetric tridiagonal Jacobi matrix (Golub-Welsch).
Weights are produced directly for the plain measure through the Christoffel
sum  w_i = 1 / sum_{k<m} phi_k(x_i)^2,  where phi_k are the normalized
Hermite (resp. Laguerre) functions; the factor e^{x^2} (resp. y^{-alpha} e^{y})
is therefore never formed and large nodes cannot overflow.
"""
import math
from typing import Callable

import numpy as np
from scipy.linalg import eigvalsh_tridiagonal

from src.core.specfun import hermite_fn_matrix, laguerre_fn_matrix
from src.exceptions import DomainError, EvaluationError
from src.logger import get_logger
from src.models.basis_models import QuadRule, RuleKind

logger = get_logger(__name__)


def _check_count(m: int) -> int:
    if int(m) != m or m < 1:
        raise DomainError(f"Rule size must be a positive integer, got {m!r}")
    return int(m)


def _jacobi_nodes(diagonal: np.ndarray, off_diagonal: np.ndarray) -> np.ndarray:
    if diagonal.size == 1:
        return diagonal.copy()
    return eigvalsh_tridiagonal(diagonal, off_diagonal, lapack_driver="stev")


def gauss_hermite(m: int, scale: float = 1.0) -> QuadRule:
    """m-point Gauss-Hermite rule for the plain measure dx.

    With scale s the nodes are s*x_i and the weights s*w_i, which suits
    integrands decaying like exp(-x^2/s^2).
    """
    m = _check_count(m)
    if not scale > 0:
        raise DomainError(f"Rule scale must be positive, got {scale}")

    k = np.arange(1, m)
    nodes = _jacobi_nodes(np.zeros(m), np.sqrt(k / 2.0))
    # Symmetrize: the spectrum is symmetric about 0 and the middle node of an odd rule is 0
    nodes = 0.5 * (nodes - nodes[::-1])

    basis = hermite_fn_matrix(m - 1, nodes)
    weights = 1.0 / np.sum(basis * basis, axis=0)
    weights = 0.5 * (weights + weights[::-1])

    logger.debug(f"Gauss-Hermite rule: m={m}, scale={scale}, largest node={nodes[-1]:.6g}")
    return QuadRule(RuleKind.GAUSS_HERMITE, scale * nodes, scale * weights, scale=float(scale))


def gauss_laguerre(m: int, alpha: float) -> QuadRule:
    """m-point generalized Gauss-Laguerre rule for the plain measure dy on [0, inf)."""
    m = _check_count(m)
    if not alpha > -1:
        raise DomainError(f"Laguerre parameter must satisfy alpha > -1, got {alpha}")

    n = np.arange(m)
    k = np.arange(1, m)
    nodes = _jacobi_nodes(2.0 * n + alpha + 1.0, np.sqrt(k * (k + alpha)))
    nodes = np.maximum(nodes, np.finfo(float).tiny)

    basis = laguerre_fn_matrix(m - 1, alpha, nodes)
    weights = 1.0 / np.sum(basis * basis, axis=0)

    logger.debug(f"Gauss-Laguerre rule: m={m}, alpha={alpha}, largest node={nodes[-1]:.6g}")
    return QuadRule(RuleKind.GAUSS_LAGUERRE, nodes, weights, alpha=float(alpha))


def default_rule_size(modes: int, margin: int = 32) -> int:
    """Rule size used when projecting onto `modes` basis functions."""
    return 2 * modes + margin


def integrate(rule: QuadRule, f: Callable[[np.ndarray], np.ndarray]) -> complex:
    """sum_i w_i f(x_i); `f` is called once on the whole node array."""
    values = np.asarray(f(rule.nodes), dtype=complex)
    if values.shape == ():
        values = np.full(len(rule), values)
    bad = ~np.isfinite(values)
    if np.any(bad):
        i = int(np.argmax(bad))
        raise EvaluationError(float(rule.nodes[i]), complex(values[i]))
    return complex(np.sum(rule.weights * values))


def moment_error(rule: QuadRule) -> float:
    """Relative error of the rule on the zeroth moment of its classical weight."""
    if rule.kind == RuleKind.GAUSS_HERMITE:
        s = rule.scale
        exact = s * math.sqrt(math.pi)
        got = integrate(rule, lambda x: np.exp(-(x / s) ** 2)).real
    else:
        a = rule.alpha
        exact = math.gamma(a + 1.0)
        got = integrate(rule, lambda y: np.exp(a * np.log(y) - y)).real
    return abs(got - exact) / exact
