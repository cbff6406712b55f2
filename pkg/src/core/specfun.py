"""Hermite functions K_n(x) and generalized Laguerre functions M_n^alpha(y).

Both families are evaluated with normalized three-term recurrences. The
polynomial part is carried separately from the exponential envelope and
rescaled by exact powers of two whenever it grows large, so no intermediate
overflows and the envelope is applied once, in log space, per output row.
Power-of-two rescaling is exact, which keeps K_n(-x) = (-1)^n K_n(x) bitwise.
"""
import math
from typing import Tuple

import numpy as np
from scipy.special import gammaln

from src.exceptions import DomainError
from src.logger import get_logger

logger = get_logger(__name__)

PI_QUARTER = math.pi ** -0.25
LN2 = math.log(2.0)

# Binary exponent above which the carried polynomial part is renormalized
_RESCALE_EXPONENT = 256


def check_index(n: int, name: str = "n") -> int:
    if int(n) != n or n < 0:
        raise DomainError(f"{name} must be a non-negative integer, got {n!r}")
    return int(n)


def _as_finite_array(x, name: str) -> np.ndarray:
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    return arr


def _renormalize(current: np.ndarray, previous: np.ndarray, shift: np.ndarray) -> None:
    """Pull large entries back towards unit size by exact powers of two (in place)."""
    _, exponent = np.frexp(current)
    big = exponent > _RESCALE_EXPONENT
    if np.any(big):
        drop = np.where(big, exponent, 0)
        current[:] = np.ldexp(current, -drop)
        previous[:] = np.ldexp(previous, -drop)
        shift += drop


def hermite_fn_matrix(nmax: int, x) -> np.ndarray:
    """Rows K_0..K_nmax evaluated at every abscissa in `x`; shape (nmax+1, len(x))."""
    nmax = check_index(nmax, "nmax")
    xs = _as_finite_array(x, "x")

    out = np.empty((nmax + 1, xs.size))
    log_envelope = -0.5 * xs * xs
    shift = np.zeros(xs.size, dtype=np.int64)

    prev = np.zeros(xs.size)
    cur = np.full(xs.size, PI_QUARTER)
    out[0] = cur * np.exp(log_envelope)
    for n in range(1, nmax + 1):
        nxt = math.sqrt(2.0 / n) * xs * cur - math.sqrt((n - 1) / n) * prev
        prev, cur = cur, nxt
        _renormalize(cur, prev, shift)
        out[n] = cur * np.exp(log_envelope + shift * LN2)
    return out


def hermite_fn_batch(nmax: int, x: float) -> np.ndarray:
    """K_0(x)..K_nmax(x) from a single recurrence pass."""
    return hermite_fn_matrix(nmax, [x])[:, 0]


def hermite_fn(n: int, x: float) -> float:
    """Normalized Hermite function K_n(x)."""
    n = check_index(n)
    return float(hermite_fn_matrix(n, [x])[n, 0])


def hermite_fn_derivative(n: int, x) -> np.ndarray:
    """K_n'(x) = sqrt(n/2) K_{n-1}(x) - sqrt((n+1)/2) K_{n+1}(x)."""
    n = check_index(n)
    rows = hermite_fn_matrix(n + 1, x)
    lower = rows[n - 1] if n > 0 else 0.0
    return math.sqrt(n / 2.0) * lower - math.sqrt((n + 1) / 2.0) * rows[n + 1]


def _laguerre_log_envelope(alpha: float, ys: np.ndarray) -> np.ndarray:
    """log of y^(alpha/2) e^(-y/2) / sqrt(Gamma(alpha+1)), with 0^0 taken as 1."""
    log_power = np.zeros_like(ys)
    positive = ys > 0
    log_power[positive] = 0.5 * alpha * np.log(ys[positive])
    if alpha > 0:
        log_power[~positive] = -np.inf
    elif alpha < 0:
        log_power[~positive] = np.inf
    return log_power - 0.5 * ys - 0.5 * gammaln(alpha + 1.0)


def laguerre_fn_matrix(nmax: int, alpha: float, y) -> np.ndarray:
    """Rows M_0^alpha..M_nmax^alpha evaluated at every point of `y`."""
    nmax = check_index(nmax, "nmax")
    if not alpha > -1:
        raise DomainError(f"Laguerre parameter must satisfy alpha > -1, got {alpha}")
    ys = _as_finite_array(y, "y")
    if np.any(ys < 0):
        raise DomainError("Laguerre functions are defined for y >= 0 only")

    out = np.empty((nmax + 1, ys.size))
    log_envelope = _laguerre_log_envelope(alpha, ys)
    shift = np.zeros(ys.size, dtype=np.int64)

    prev = np.zeros(ys.size)
    cur = np.ones(ys.size)
    with np.errstate(over="ignore", invalid="ignore"):
        out[0] = cur * np.exp(log_envelope)
        for n in range(nmax):
            nxt = ((2 * n + 1 + alpha - ys) * cur - math.sqrt(n * (n + alpha)) * prev) / math.sqrt(
                (n + 1) * (n + 1 + alpha)
            )
            prev, cur = cur, nxt
            _renormalize(cur, prev, shift)
            out[n + 1] = cur * np.exp(log_envelope + shift * LN2)
    return out


def laguerre_fn(n: int, alpha: float, y: float) -> float:
    """Normalized generalized Laguerre function M_n^alpha(y)."""
    n = check_index(n)
    return float(laguerre_fn_matrix(n, alpha, [y])[n, 0])


def hermite_de_residual(n: int, x: float, h: float) -> float:
    """Central-difference value of (-D^2 + x^2 - (2n+1)) K_n at x."""
    n = check_index(n)
    if not h > 0:
        raise DomainError(f"Finite-difference step must be positive, got {h}")
    left, mid, right = hermite_fn_matrix(n, [x - h, x, x + h])[n]
    second = (right - 2.0 * mid + left) / (h * h)
    return float(-second + (x * x - (2 * n + 1)) * mid)


def hermite_laguerre_bridge(n: int, x: float, odd: bool = False) -> Tuple[float, float]:
    """Both sides of the Hermite-Laguerre identity at x.

    Even branch: (K_{2n}(x), (-1)^n |x|^(1/2) M_n^{-1/2}(x^2)).
    Odd branch:  (K_{2n+1}(x), (-1)^n sign(x) |x|^(1/2) M_n^{+1/2}(x^2)).
    At x = 0 the Laguerre side is a 0*inf limit, so the Hermite value is used on both sides.
    """
    n = check_index(n)
    x = float(_as_finite_array(x, "x")[0])
    degree = 2 * n + 1 if odd else 2 * n
    hermite_side = hermite_fn(degree, x)
    if x == 0.0:
        return hermite_side, hermite_side

    alpha = 0.5 if odd else -0.5
    sign = (-1.0) ** n
    laguerre_side = sign * math.sqrt(abs(x)) * laguerre_fn(n, alpha, x * x)
    if odd:
        laguerre_side *= math.copysign(1.0, x)
    return hermite_side, laguerre_side


def hermite_poly_int(n: int, x: int) -> int:
    """Physicists' Hermite polynomial H_n at an integer, in exact integer arithmetic."""
    n = check_index(n)
    x = int(x)
    prev, cur = 0, 1
    for k in range(n):
        prev, cur = cur, 2 * x * cur - 2 * k * prev
    return cur
