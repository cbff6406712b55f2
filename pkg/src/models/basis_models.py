"""Value types shared by the numerical kernels."""
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from src.exceptions import BasisMismatchError, DomainError


class BasisKind(str, Enum):
    """Spectral basis family."""
    HERMITE = "hermite"
    LAGUERRE = "laguerre"


class RuleKind(str, Enum):
    """Gauss quadrature family."""
    GAUSS_HERMITE = "gauss_hermite"
    GAUSS_LAGUERRE = "gauss_laguerre"


class KernelSign(str, Enum):
    """Half-line transform kernel: Plus is the cosine kernel, Minus the sine kernel."""
    PLUS = "plus"
    MINUS = "minus"


@dataclass(frozen=True)
class Basis:
    """Hermite basis, or Laguerre basis with parameter alpha."""
    kind: BasisKind
    alpha: float = 0.0

    def __post_init__(self):
        if self.kind == BasisKind.LAGUERRE and not self.alpha > -1:
            raise DomainError(f"Laguerre parameter must satisfy alpha > -1, got {self.alpha}")

    @classmethod
    def hermite(cls) -> "Basis":
        return cls(BasisKind.HERMITE)

    @classmethod
    def laguerre(cls, alpha: float) -> "Basis":
        return cls(BasisKind.LAGUERRE, float(alpha))

    def __str__(self) -> str:
        if self.kind == BasisKind.HERMITE:
            return "Hermite"
        return f"Laguerre(alpha={self.alpha:g})"


def _frozen(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True)
class CoeffVec:
    """Finite coefficient vector a_0..a_{N-1} against a declared basis."""
    basis: Basis
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=complex).ravel()
        object.__setattr__(self, "values", _frozen(values))

    def __len__(self) -> int:
        return self.values.shape[0]

    @classmethod
    def zeros(cls, basis: Basis, size: int) -> "CoeffVec":
        return cls(basis, np.zeros(size, dtype=complex))

    @classmethod
    def unit(cls, basis: Basis, size: int, index: int) -> "CoeffVec":
        values = np.zeros(size, dtype=complex)
        values[index] = 1.0
        return cls(basis, values)

    def with_values(self, values: np.ndarray) -> "CoeffVec":
        """Same basis, new values."""
        return CoeffVec(self.basis, values)

    def require(self, basis: Basis) -> "CoeffVec":
        """Raise unless this vector is expressed in `basis`."""
        if self.basis != basis:
            raise BasisMismatchError(f"Expected coefficients in {basis}, got {self.basis}")
        return self

    def require_kind(self, kind: BasisKind) -> "CoeffVec":
        if self.basis.kind != kind:
            raise BasisMismatchError(f"Expected a {kind.value} basis, got {self.basis}")
        return self


@dataclass(frozen=True)
class SampledSignal:
    """Uniformly gridded samples: values[j] sits at x0 + j*dx."""
    x0: float
    dx: float
    values: np.ndarray

    def __post_init__(self):
        if not self.dx > 0:
            raise DomainError(f"Sample step must be positive, got {self.dx}")
        values = np.array(self.values, dtype=complex).ravel()
        if values.size == 0:
            raise DomainError("Sampled signal needs at least one sample")
        object.__setattr__(self, "values", _frozen(values))

    def __len__(self) -> int:
        return self.values.shape[0]

    @property
    def grid(self) -> np.ndarray:
        return self.x0 + self.dx * np.arange(len(self))

    @classmethod
    def from_grid(cls, grid: np.ndarray, values: np.ndarray) -> "SampledSignal":
        """Build from an explicit grid, which must be uniform."""
        grid = np.asarray(grid, dtype=float)
        if grid.size == 1:
            return cls(float(grid[0]), 1.0, values)
        steps = np.diff(grid)
        dx = float(steps.mean())
        if not np.allclose(steps, dx, rtol=1e-6, atol=0.0):
            raise DomainError("Sample grid is not uniform")
        return cls(float(grid[0]), dx, values)


@dataclass(frozen=True)
class QuadRule:
    """Gauss rule with plain-measure weights: sum(w * f(x)) approximates the integral of f."""
    kind: RuleKind
    nodes: np.ndarray
    weights: np.ndarray
    alpha: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        nodes = np.array(self.nodes, dtype=float)
        weights = np.array(self.weights, dtype=float)
        if nodes.shape != weights.shape:
            raise DomainError("Quadrature nodes and weights differ in length")
        object.__setattr__(self, "nodes", _frozen(nodes))
        object.__setattr__(self, "weights", _frozen(weights))

    def __len__(self) -> int:
        return self.nodes.shape[0]

    def require_hermite(self) -> "QuadRule":
        if self.kind != RuleKind.GAUSS_HERMITE:
            raise BasisMismatchError(f"Expected a Gauss-Hermite rule, got {self.kind.value}")
        return self

    def require_laguerre(self, alpha: Optional[float] = None) -> "QuadRule":
        if self.kind != RuleKind.GAUSS_LAGUERRE:
            raise BasisMismatchError(f"Expected a Gauss-Laguerre rule, got {self.kind.value}")
        if alpha is not None and not np.isclose(self.alpha, alpha, rtol=0.0, atol=1e-14):
            raise BasisMismatchError(f"Rule built for alpha={self.alpha}, requested alpha={alpha}")
        return self


@dataclass(frozen=True)
class SubspaceLabel:
    """Summand (k, r) of the split by index residue modulo k."""
    k: int
    r: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"Subspace modulus must be >= 1, got k={self.k}")
        if not 0 <= self.r < self.k:
            raise DomainError(f"Subspace residue must satisfy 0 <= r < k, got r={self.r}, k={self.k}")

    def contains(self, n: int) -> bool:
        return n % self.k == self.r

    def key(self) -> str:
        return f"{self.k}:{self.r}"


@dataclass(frozen=True)
class QRLabel:
    """Flat index n written as n = k*q + r."""
    k: int
    q: int
    r: int

    @property
    def n(self) -> int:
        return self.k * self.q + self.r


@dataclass(frozen=True)
class CircleFunc:
    """Two-sided coefficients c_{-M}..c_M of f(phi) = (2 pi)^(-1/2) sum c_m exp(-i m phi)."""
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.array(self.coeffs, dtype=complex).ravel()
        if coeffs.size % 2 != 1:
            raise DomainError("Two-sided coefficient vector must have odd length 2M+1")
        object.__setattr__(self, "coeffs", _frozen(coeffs))

    @property
    def cutoff(self) -> int:
        return (self.coeffs.size - 1) // 2

    @property
    def orders(self) -> np.ndarray:
        return np.arange(-self.cutoff, self.cutoff + 1)

    def coefficient(self, m: int) -> complex:
        if abs(m) > self.cutoff:
            return 0j
        return complex(self.coeffs[m + self.cutoff])

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.coeffs) ** 2))


@dataclass(frozen=True)
class ChiSeq:
    """Hermite function values at the integers -M..M."""
    n: int
    samples: np.ndarray
    tail: float = field(init=False, default=0.0)

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float).ravel()
        object.__setattr__(self, "samples", _frozen(samples))
        object.__setattr__(self, "tail", float(max(abs(samples[0]), abs(samples[-1]))))

    @property
    def cutoff(self) -> int:
        return (self.samples.size - 1) // 2

    def at(self, m: int) -> float:
        return float(self.samples[m + self.cutoff])

    def norm_squared(self) -> float:
        return float(np.dot(self.samples, self.samples))
