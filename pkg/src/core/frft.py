"""Fractional Fourier transform on Hermite coefficients and the (k, r) split.

[F^a f] = sum_n a_n exp(i n a pi/2) K_n, so a = 1 is the Fourier transform with
kernel exp(+ipx)/sqrt(2 pi) and a = 4 is the identity.
"""
import math
from typing import Callable, List

import numpy as np

from src.core.quadrature import integrate
from src.core.spectral import evaluate
from src.exceptions import DomainError
from src.logger import get_logger
from src.models.basis_models import BasisKind, CoeffVec, QuadRule, SubspaceLabel

logger = get_logger(__name__)

# Flip to -1 for the signal-processing convention exp(-i n a pi/2)
PHASE_SIGN = 1

_QUARTER_TURNS = np.array([1.0, 1j, -1.0, -1j])


def fractional_phases(size: int, a: float) -> np.ndarray:
    """exp(PHASE_SIGN * i n a pi/2) for n < size, exact on quarter turns."""
    if not math.isfinite(a):
        raise DomainError(f"Transform order must be finite, got {a}")
    n = np.arange(size)
    turns = np.mod(PHASE_SIGN * n * math.fmod(a, 4.0), 4.0)
    whole = np.rint(turns)
    exact = turns == whole
    phases = np.exp(0.5j * math.pi * turns)
    phases[exact] = _QUARTER_TURNS[whole[exact].astype(int) % 4]
    return phases


def frft(c: CoeffVec, a: float) -> CoeffVec:
    """Order-a fractional Fourier transform of Hermite coefficients."""
    c.require_kind(BasisKind.HERMITE)
    return c.with_values(fractional_phases(len(c), a) * c.values)


def fourier_quadrature(f: Callable[[np.ndarray], np.ndarray], p: float, rule: QuadRule) -> complex:
    """(2 pi)^(-1/2) integral exp(ipx) f(x) dx on a Gauss-Hermite rule."""
    rule.require_hermite()
    kernel = lambda x: np.exp(1j * p * x) * np.asarray(f(x), dtype=complex)
    return integrate(rule, kernel) / math.sqrt(2.0 * math.pi)


def fourier_transform_synthesized(c: CoeffVec, momenta) -> np.ndarray:
    """Fourier transform of the function represented by `c`, at the given momenta."""
    return evaluate(frft(c, 1.0), momenta)


def project_subspace(c: CoeffVec, s: SubspaceLabel) -> CoeffVec:
    """Keep the entries with n = r mod k, zero the rest."""
    mask = np.arange(len(c)) % s.k == s.r
    return c.with_values(np.where(mask, c.values, 0.0))


def decompose(c: CoeffVec, k: int) -> List[CoeffVec]:
    """Split `c` into its k eigen-subspace parts, r = 0..k-1."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    parts = [project_subspace(c, SubspaceLabel(k, r)) for r in range(k)]
    logger.debug(f"Split {len(c)} coefficients into {k} subspaces")
    return parts


def subspace_eigenvalue(s: SubspaceLabel) -> complex:
    """Eigenvalue of F^(4/k) on the (k, r) subspace."""
    return complex(fractional_phases(s.r + 1, 4.0 / s.k)[s.r])
