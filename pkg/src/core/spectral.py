"""Analysis and synthesis between function space and Hermite/Laguerre coefficients.

The pairing used throughout is a_n = integral K_n(x) f(x) dx against
f(x) = sum_n a_n K_n(x) (and likewise with M_n^alpha on the half-line), which
is unitary. Callables are evaluated on quadrature nodes; sampled signals are
interpolated onto them and taken as zero outside their window.
"""
from typing import Callable, Sequence, Union

import numpy as np
from scipy.interpolate import CubicSpline

from src.core.specfun import hermite_fn_matrix, laguerre_fn_matrix
from src.exceptions import BasisMismatchError, DomainError
from src.logger import get_logger
from src.models.basis_models import Basis, BasisKind, CoeffVec, QuadRule, SampledSignal

logger = get_logger(__name__)

Source = Union[Callable[[np.ndarray], np.ndarray], SampledSignal]


def _interpolate(signal: SampledSignal, points: np.ndarray, interpolation: str) -> np.ndarray:
    grid = signal.grid
    inside = (points >= grid[0]) & (points <= grid[-1])
    if interpolation == "linear":
        real = np.interp(points, grid, signal.values.real, left=0.0, right=0.0)
        imag = np.interp(points, grid, signal.values.imag, left=0.0, right=0.0)
        return real + 1j * imag
    if interpolation == "cubic":
        if len(signal) < 4:
            raise DomainError("Cubic interpolation needs at least four samples")
        spline = CubicSpline(grid, signal.values)
        return np.where(inside, spline(np.clip(points, grid[0], grid[-1])), 0.0)
    raise DomainError(f"Unknown interpolation '{interpolation}'")


def _evaluate(f: Source, points: np.ndarray, interpolation: str) -> np.ndarray:
    if isinstance(f, SampledSignal):
        return _interpolate(f, points, interpolation)
    values = np.asarray(f(points), dtype=complex)
    if values.shape == ():
        values = np.full(points.shape, values)
    return values


def _check_modes(N: int) -> int:
    if int(N) != N or N < 1:
        raise DomainError(f"Number of modes must be a positive integer, got {N!r}")
    return int(N)


def analyze_hermite(f: Source, N: int, rule: QuadRule, interpolation: str = "linear") -> CoeffVec:
    """values[n] = sum_i w_i K_n(x_i) f(x_i), n < N."""
    N = _check_modes(N)
    rule.require_hermite()
    basis = hermite_fn_matrix(N - 1, rule.nodes)
    samples = _evaluate(f, rule.nodes, interpolation)
    return CoeffVec(Basis.hermite(), basis @ (rule.weights * samples))


def synthesize_hermite(c: CoeffVec, grid: Sequence[float]) -> SampledSignal:
    """values[j] = sum_n a_n K_n(grid[j])."""
    c.require_kind(BasisKind.HERMITE)
    points = np.asarray(grid, dtype=float)
    values = _synthesize_rows(hermite_fn_matrix(max(len(c) - 1, 0), points), c)
    return SampledSignal.from_grid(points, values)


def analyze_laguerre(
    f: Source, N: int, alpha: float, rule: QuadRule, interpolation: str = "linear"
) -> CoeffVec:
    """values[n] = sum_i w_i M_n^alpha(y_i) f(y_i), n < N."""
    N = _check_modes(N)
    rule.require_laguerre(alpha)
    basis = laguerre_fn_matrix(N - 1, alpha, rule.nodes)
    samples = _evaluate(f, rule.nodes, interpolation)
    return CoeffVec(Basis.laguerre(alpha), basis @ (rule.weights * samples))


def synthesize_laguerre(c: CoeffVec, grid: Sequence[float]) -> SampledSignal:
    """values[j] = sum_n a_n M_n^alpha(grid[j])."""
    c.require_kind(BasisKind.LAGUERRE)
    points = np.asarray(grid, dtype=float)
    values = _synthesize_rows(laguerre_fn_matrix(max(len(c) - 1, 0), c.basis.alpha, points), c)
    return SampledSignal.from_grid(points, values)


def _synthesize_rows(rows: np.ndarray, c: CoeffVec) -> np.ndarray:
    if len(c) == 0:
        return np.zeros(rows.shape[1], dtype=complex)
    return c.values @ rows[: len(c)]


def synthesize(c: CoeffVec, grid: Sequence[float]) -> SampledSignal:
    """Dispatch on the basis of `c`."""
    if c.basis.kind == BasisKind.HERMITE:
        return synthesize_hermite(c, grid)
    return synthesize_laguerre(c, grid)


def evaluate(c: CoeffVec, points: Sequence[float]) -> np.ndarray:
    """Synthesized values at arbitrary (not necessarily uniform) points."""
    points = np.atleast_1d(np.asarray(points, dtype=float))
    if c.basis.kind == BasisKind.HERMITE:
        rows = hermite_fn_matrix(max(len(c) - 1, 0), points)
    else:
        rows = laguerre_fn_matrix(max(len(c) - 1, 0), c.basis.alpha, points)
    return _synthesize_rows(rows, c)


def energy(c: CoeffVec) -> float:
    """sum_n |a_n|^2."""
    return float(np.sum(np.abs(c.values) ** 2))


def inner_product(c: CoeffVec, d: CoeffVec) -> complex:
    """<c, d> = sum_n conj(c_n) d_n, both in the same basis and length."""
    d.require(c.basis)
    if len(c) != len(d):
        raise BasisMismatchError(f"Coefficient lengths differ: {len(c)} vs {len(d)}")
    return complex(np.vdot(c.values, d.values))


def _fit(rows: np.ndarray, signal: SampledSignal, basis: Basis) -> CoeffVec:
    # M_n^alpha is singular at y = 0 for alpha < 0; such samples carry no usable equation
    usable = np.all(np.isfinite(rows), axis=0)
    if not np.all(usable):
        logger.debug(f"Dropping {int((~usable).sum())} singular sample(s) from the {basis} fit")
    design = np.sqrt(signal.dx) * rows[:, usable].T
    target = np.sqrt(signal.dx) * signal.values[usable]
    coeffs, _, rank, _ = np.linalg.lstsq(design, target, rcond=None)
    if rank < design.shape[1]:
        logger.warning(f"Sample grid resolves only {rank} of {design.shape[1]} {basis} modes")
    return CoeffVec(basis, coeffs)


def fit_hermite(signal: SampledSignal, N: int) -> CoeffVec:
    """Least-squares Hermite coefficients of a sampled signal on its own grid."""
    N = _check_modes(N)
    return _fit(hermite_fn_matrix(N - 1, signal.grid), signal, Basis.hermite())


def fit_laguerre(signal: SampledSignal, N: int, alpha: float) -> CoeffVec:
    """Least-squares Laguerre coefficients of a sampled signal on its own grid."""
    N = _check_modes(N)
    if signal.grid[0] < 0:
        raise DomainError("Laguerre fit needs samples on y >= 0")
    return _fit(laguerre_fn_matrix(N - 1, alpha, signal.grid), signal, Basis.laguerre(alpha))
