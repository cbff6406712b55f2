"""Unitary filter steps: fractional transforms and the half-line involution."""
from typing import Optional

from src.core.frft import frft
from src.core.halfline import frt_halfline, t_transform_spectral
from src.exceptions import BasisMismatchError
from src.models.basis_models import BasisKind, CoeffVec, KernelSign
from src.processors.base import BaseProcessor


class FrftProcessor(BaseProcessor):
    """Order-a FrFT on Hermite coefficients, or the order-a power of T+- on Laguerre ones."""

    def __init__(self, a: float, sign: Optional[KernelSign] = None):
        super().__init__()
        self.a = a
        self.sign = sign

    def describe(self) -> str:
        return f"frft(a={self.a})"

    def process(self, coeffs: CoeffVec) -> CoeffVec:
        if coeffs.basis.kind == BasisKind.HERMITE:
            return frft(coeffs, self.a)
        if self.sign is None:
            raise BasisMismatchError("A half-line fractional transform needs a kernel sign")
        return frt_halfline(coeffs, self.sign, self.a)


class InvolutionProcessor(BaseProcessor):
    """T+ or T- applied spectrally."""

    def __init__(self, sign: KernelSign):
        super().__init__()
        self.sign = KernelSign(sign)

    def describe(self) -> str:
        return f"t_involution({self.sign.value})"

    def process(self, coeffs: CoeffVec) -> CoeffVec:
        return t_transform_spectral(coeffs, self.sign)
