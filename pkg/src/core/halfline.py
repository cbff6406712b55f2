"""Cosine- and sine-kernel transforms on the half-line and their Laguerre spectra.

    [T+ f](s) = (2 pi)^(-1/2) integral_0^inf cos(sqrt(s y)) (s y)^(-1/4) f(y) dy
    [T- f](s) = same with sin

Both are involutions. The cosine kernel is diagonal on Laguerre functions with
alpha = -1/2 and the sine kernel on alpha = +1/2, with eigenvalue (-1)^n.
"""
import math
from typing import Callable, List, Union

import numpy as np

from src.core.frft import fourier_quadrature, fractional_phases, project_subspace
from src.core.quadrature import gauss_hermite, integrate
from src.core.specfun import hermite_fn_matrix
from src.exceptions import BasisMismatchError, DomainError
from src.logger import get_logger
from src.models.basis_models import Basis, CoeffVec, KernelSign, QuadRule, SubspaceLabel

logger = get_logger(__name__)

_ALPHA = {KernelSign.PLUS: -0.5, KernelSign.MINUS: 0.5}
_KERNEL = {KernelSign.PLUS: np.cos, KernelSign.MINUS: np.sin}


def alpha_for(sign: KernelSign) -> float:
    """Laguerre parameter on which the transform with this kernel is diagonal."""
    return _ALPHA[KernelSign(sign)]


def basis_for(sign: KernelSign) -> Basis:
    return Basis.laguerre(alpha_for(sign))


def _require_pairing(c: CoeffVec, sign: KernelSign) -> None:
    expected = basis_for(sign)
    if c.basis != expected:
        raise BasisMismatchError(
            f"The {KernelSign(sign).value} kernel acts on {expected} coefficients, got {c.basis}"
        )


def t_transform_quadrature(
    f: Callable[[np.ndarray], np.ndarray], sign: KernelSign, s: float, m: int
) -> Union[float, complex]:
    """[T+- f](s) by quadrature after the substitution y = u^2.

    The transformed integral is 2 (2 pi)^(-1/2) s^(-1/4) int_0^inf S(sqrt(s) u) u^(1/2) f(u^2) du.
    Its integrand is even once u^(1/2) f(u^2) is extended evenly (cos) or oddly (sin),
    so the positive half of a symmetric 2m-point Gauss-Hermite rule integrates it.
    """
    if not s > 0:
        raise DomainError(f"Transform variable must be positive, got s={s}")
    kernel = _KERNEL[KernelSign(sign)]
    rule = gauss_hermite(2 * m, math.sqrt(2.0))
    positive = rule.nodes > 0
    half = QuadRule(rule.kind, rule.nodes[positive], rule.weights[positive], scale=rule.scale)

    root_s = math.sqrt(s)
    integrand = lambda u: kernel(root_s * u) * np.sqrt(u) * np.asarray(f(u * u), dtype=complex)
    value = 2.0 * s ** -0.25 * integrate(half, integrand) / math.sqrt(2.0 * math.pi)
    return value.real if value.imag == 0 else value


def t_transform_spectral(c: CoeffVec, sign: KernelSign) -> CoeffVec:
    """values[n] -> (-1)^n values[n] on the paired Laguerre basis."""
    _require_pairing(c, sign)
    signs = np.where(np.arange(len(c)) % 2 == 0, 1.0, -1.0)
    return c.with_values(signs * c.values)


def frt_halfline(c: CoeffVec, sign: KernelSign, a: float) -> CoeffVec:
    """Fractional power a of T+-: values[n] -> exp(i n a pi/2) values[n]. a = 2 is T+- itself."""
    _require_pairing(c, sign)
    return c.with_values(fractional_phases(len(c), a) * c.values)


def decompose_halfline(c: CoeffVec, k: int, sign: KernelSign) -> List[CoeffVec]:
    """Index-residue split of half-line coefficients; part r has eigenvalue exp(2 pi i r/k) under order 4/k."""
    _require_pairing(c, sign)
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return [project_subspace(c, SubspaceLabel(k, r)) for r in range(k)]


def t_transform_via_hermite(n: int, sign: KernelSign, s: float, rule: QuadRule) -> float:
    """[T+- M_n](s) through the Fourier transform of K_{2n} (cos) or K_{2n+1} (sin).

    Uses K_{2n}(x) = (-1)^n |x|^(1/2) M_n^{-1/2}(x^2) and its odd counterpart.
    """
    if not s > 0:
        raise DomainError(f"Transform variable must be positive, got s={s}")
    sign = KernelSign(sign)
    degree = 2 * n if sign == KernelSign.PLUS else 2 * n + 1
    transform = fourier_quadrature(lambda x: hermite_fn_matrix(degree, x)[degree], math.sqrt(s), rule)
    part = transform.real if sign == KernelSign.PLUS else transform.imag
    return (-1.0) ** n * s ** -0.25 * part
