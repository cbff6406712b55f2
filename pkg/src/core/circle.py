"""Periodized Hermite functions on the circle and the integer-sample sequences.

Circle convention: f(phi) = (2 pi)^(-1/2) sum_m c_m exp(-i m phi) on [-pi, pi),
with <f|g> = integral f* g dphi, so sum |c_m|^2 is the squared norm.

The periodized function  P_n(phi) = sum_k K_n(phi + 2 k pi)  has Fourier
coefficients i^n K_n(m), which ties it to chi_n = (K_n(m))_m in l2(Z) and gives
<P_n|P_m> = i^(m-n) (chi_n, chi_m).
"""
import math
from typing import Callable, List, Optional, Sequence

import numpy as np
import sympy

from src.config import get_config
from src.core.specfun import check_index, hermite_fn_matrix, hermite_poly_int
from src.exceptions import AliasingError, DependenceError, DomainError, ResourceError
from src.logger import get_logger
from src.models.basis_models import ChiSeq, CircleFunc

logger = get_logger(__name__)

SQRT_2PI = math.sqrt(2.0 * math.pi)

_I_POWERS = np.array([1.0, 1j, -1.0, -1j])

# Relative norm below which a deflated vector counts as dependent
PIVOT_TOL = 1e-10


def _i_power(n) -> np.ndarray:
    return _I_POWERS[np.mod(n, 4)]


def _check_cutoff(M: int) -> int:
    if int(M) != M or M < 1:
        raise DomainError(f"Cutoff must be an integer >= 1, got {M!r}")
    return int(M)


def _reduce_angle(phi: np.ndarray) -> np.ndarray:
    return np.mod(phi + math.pi, 2.0 * math.pi) - math.pi


def wrap_radius(n: int, tol: float) -> int:
    """Least Kmax with sqrt(2n+1) + sqrt(2 ln(10/tol)) < (2 Kmax - 1) pi."""
    n = check_index(n)
    if not tol > 0:
        raise DomainError(f"Tolerance must be positive, got {tol}")
    reach = math.sqrt(2 * n + 1) + math.sqrt(2.0 * math.log(10.0 / tol))
    return max(1, math.floor((reach / math.pi + 1.0) / 2.0) + 1)


def periodized_hermite_direct(n: int, phi, tol: Optional[float] = None):
    """Wrap-sum sum_{|k|<=Kmax} K_n(phi + 2 k pi); phi is reduced to [-pi, pi) first."""
    n = check_index(n)
    tol = get_config().WRAP_SUM_TOL if tol is None else tol
    k_max = wrap_radius(n, tol)
    angles = _reduce_angle(np.atleast_1d(np.asarray(phi, dtype=float)))
    shifts = 2.0 * math.pi * np.arange(-k_max, k_max + 1)
    points = (angles[:, None] + shifts[None, :]).ravel()
    values = hermite_fn_matrix(n, points)[n].reshape(angles.size, shifts.size).sum(axis=1)
    logger.debug(f"Wrap-sum for n={n}: Kmax={k_max}")
    return float(values[0]) if np.ndim(phi) == 0 else values


def circle_fourier_coeffs(n: int, M: int) -> CircleFunc:
    """c_m = i^n K_n(m) for |m| <= M."""
    n = check_index(n)
    M = _check_cutoff(M)
    samples = hermite_fn_matrix(n, np.arange(-M, M + 1))[n]
    return CircleFunc(_i_power(n) * samples)


def periodized_hermite_fourier(n: int, phi, M: int):
    """(i^n / sqrt(2 pi)) sum_{|m|<=M} K_n(m) exp(-i m phi)."""
    return fourier_series_synthesize(circle_fourier_coeffs(n, M), phi)


def chi_seq(n: int, M: int) -> ChiSeq:
    """K_n at the integers -M..M."""
    n = check_index(n)
    M = _check_cutoff(M)
    seq = ChiSeq(n, hermite_fn_matrix(n, np.arange(-M, M + 1))[n])
    tol = get_config().CIRCLE_TAIL_TOL
    if seq.tail > tol:
        logger.warning(f"chi_{n} truncated at M={M} with tail {seq.tail:.3e} above {tol:.1e}")
    return seq


def gram_matrix(N: int, M: int) -> np.ndarray:
    """G[n][m] = i^(m-n) sum_{|j|<=M} K_n(j) K_m(j), n, m < N."""
    if N < 1:
        raise DomainError(f"Gram matrix order must be >= 1, got {N}")
    M = _check_cutoff(M)
    rows = hermite_fn_matrix(N - 1, np.arange(-M, M + 1))
    tail = float(np.max(np.abs(rows[:, [0, -1]])))
    if tail > get_config().CIRCLE_TAIL_TOL:
        logger.warning(f"Gram matrix N={N}, M={M}: Hermite tail {tail:.3e} at the cutoff")
    index = np.arange(N)
    phase = _i_power(index[None, :] - index[:, None])
    return phase * (rows @ rows.T)


def gram_condition_number(gram: np.ndarray) -> float:
    """2-norm condition number; no claim is made about its growth with N."""
    cond = float(np.linalg.cond(gram))
    if cond > 1e12:
        logger.warning(f"Gram matrix of order {gram.shape[0]} is ill-conditioned (cond={cond:.3e})")
    return cond


def gram_schmidt(vectors: Sequence[Sequence[complex]]) -> List[np.ndarray]:
    """Modified Gram-Schmidt with one reorthogonalization pass."""
    basis: List[np.ndarray] = []
    for index, vector in enumerate(vectors):
        v = np.array(vector, dtype=complex)
        original = np.linalg.norm(v)
        for _ in range(2):
            for q in basis:
                v = v - np.vdot(q, v) * q
        pivot = np.linalg.norm(v)
        if original == 0 or pivot < PIVOT_TOL * original:
            raise DependenceError(index, float(pivot / original) if original else 0.0)
        basis.append(v / pivot)
    return basis


def chi_gram_schmidt(N: int, M: int) -> List[np.ndarray]:
    """Orthonormalize chi_0..chi_{N-1} in l2 of {-M..M}."""
    return gram_schmidt([chi_seq(n, M).samples for n in range(N)])


def _det_nodes(N: int, mode: str) -> List[int]:
    if mode == "full":
        return list(range(-N, N + 1))
    if mode == "half":
        return list(range(0, N + 1))
    raise DomainError(f"Unknown determinant mode '{mode}'")


def hermite_integer_det(N: int, mode: str = "full") -> int:
    """Exact det[H_n(x_j)] with n = 0..len-1 over integer nodes.

    full: nodes -N..N (2N+1 rows); half: nodes 0..N (N+1 rows).
    """
    N = check_index(N, "N")
    limit = get_config().MAX_DET_ORDER
    if N > limit:
        raise ResourceError(f"Exact determinant of order N={N} exceeds MAX_DET_ORDER={limit}")
    nodes = _det_nodes(N, mode)
    matrix = sympy.Matrix([[hermite_poly_int(n, x) for x in nodes] for n in range(len(nodes))])
    det = int(matrix.det(method="bareiss"))
    logger.debug(f"Hermite integer determinant ({mode}, N={N}) = {det}")
    return det


def hermite_vandermonde_det(N: int, mode: str = "full") -> int:
    """Closed form of hermite_integer_det: prod 2^n times the Vandermonde of the nodes."""
    N = check_index(N, "N")
    nodes = _det_nodes(N, mode)
    lead = 2 ** sum(range(len(nodes)))
    vandermonde = 1
    for i, xi in enumerate(nodes):
        for xj in nodes[i + 1:]:
            vandermonde *= xj - xi
    return lead * vandermonde


def circle_grid(grid: int) -> np.ndarray:
    """phi_j = -pi + 2 pi j / grid."""
    return -math.pi + 2.0 * math.pi * np.arange(grid) / grid


def fourier_series_analyze(f: Callable[[np.ndarray], np.ndarray], M: int, grid: int) -> CircleFunc:
    """c_m = (sqrt(2 pi)/G) sum_j f(phi_j) exp(i m phi_j), trapezoidal on G points."""
    if M < 0:
        raise DomainError(f"Cutoff must be non-negative, got {M}")
    if grid < 2 * M + 1:
        raise AliasingError(f"Grid of {grid} points cannot resolve orders |m| <= {M} (need {2 * M + 1})")
    phi = circle_grid(grid)
    values = np.asarray(f(phi), dtype=complex)
    if values.shape == ():
        values = np.full(grid, values)
    orders = np.arange(-M, M + 1)
    kernel = np.exp(1j * np.outer(orders, phi))
    return CircleFunc(SQRT_2PI / grid * (kernel @ values))


def fourier_series_synthesize(c: CircleFunc, phi):
    """(2 pi)^(-1/2) sum_m c_m exp(-i m phi)."""
    angles = np.atleast_1d(np.asarray(phi, dtype=float))
    values = np.exp(-1j * np.outer(angles, c.orders)) @ c.coeffs / SQRT_2PI
    return complex(values[0]) if np.ndim(phi) == 0 else values


def circle_inner_product(
    f: Callable[[np.ndarray], np.ndarray], g: Callable[[np.ndarray], np.ndarray], grid: int
) -> complex:
    """Trapezoidal integral of conj(f) g over [-pi, pi)."""
    if grid < 1:
        raise DomainError(f"Grid must have at least one point, got {grid}")
    phi = circle_grid(grid)
    fv = np.asarray(f(phi), dtype=complex)
    gv = np.asarray(g(phi), dtype=complex)
    return complex(2.0 * math.pi / grid * np.vdot(fv, gv))
