"""Index-mask filter steps: truncation and (k, r) subspace selection."""
from typing import Iterable

import numpy as np

from src.models.basis_models import CoeffVec, SubspaceLabel
from src.processors.base import BaseProcessor


class TruncateProcessor(BaseProcessor):
    """Keeps coefficients a_0..a_nmax."""

    def __init__(self, nmax: int):
        super().__init__()
        self.nmax = nmax

    def describe(self) -> str:
        return f"truncate(nmax={self.nmax})"

    def process(self, coeffs: CoeffVec) -> CoeffVec:
        keep = np.arange(len(coeffs)) <= self.nmax
        return coeffs.with_values(np.where(keep, coeffs.values, 0.0))


class SubspaceProcessor(BaseProcessor):
    """Keeps the union of the (k, r) eigen-subspaces for the given residues."""

    def __init__(self, k: int, residues: Iterable[int]):
        super().__init__()
        self.labels = [SubspaceLabel(k, r) for r in sorted(set(residues))]
        self.k = k

    def describe(self) -> str:
        return f"keep_subspaces(k={self.k}, r={[s.r for s in self.labels]})"

    def process(self, coeffs: CoeffVec) -> CoeffVec:
        residues = np.arange(len(coeffs)) % self.k
        keep = np.isin(residues, [s.r for s in self.labels])
        return coeffs.with_values(np.where(keep, coeffs.values, 0.0))
