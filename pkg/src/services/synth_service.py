"""Synthetic test signals."""
from typing import Dict, Optional, Tuple

import numpy as np

from src.core.specfun import hermite_fn_matrix
from src.exceptions import DataValidationError
from src.logger import get_logger
from src.models.basis_models import SampledSignal
from src.models.plan_models import SynthKind

logger = get_logger(__name__)

RNG_ALGORITHM = "PCG64"


def parse_mix(text: str) -> Dict[int, float]:
    """Parse "n:w,n:w" into {n: w}."""
    weights: Dict[int, float] = {}
    try:
        for item in text.split(","):
            if not item.strip():
                continue
            index, weight = item.split(":")
            n = int(index)
            if n < 0:
                raise ValueError(f"negative index {n}")
            weights[n] = weights.get(n, 0.0) + float(weight)
    except ValueError as e:
        raise DataValidationError(f"Malformed hermite mix '{text}': {e}")
    if not weights:
        raise DataValidationError("hermite_mix needs at least one 'n:w' term")
    return weights


class SynthService:
    """Service generating deterministic test signals on a uniform grid."""

    def __init__(self):
        logger.debug("SynthService initialized")

    def synth_signal(
        self,
        kind: SynthKind,
        n: int,
        t0: float,
        dt: float,
        mix: Optional[str] = None,
        base: SynthKind = SynthKind.GAUSSIAN_PULSE,
        snr_db: float = 20.0,
        seed: int = 0,
    ) -> Tuple[SampledSignal, Optional[str]]:
        """
        Generate a signal of `n` samples starting at `t0` with step `dt`.

        Args:
            kind: Signal family
            n: Number of samples
            t0: First sample time
            dt: Sample step
            mix: Hermite weights "n:w,n:w" (hermite_mix, or a noisy hermite_mix base)
            base: Clean signal under the noise (noisy only)
            snr_db: Signal-to-noise ratio in dB (noisy only)
            seed: Generator seed (noisy only)

        Returns:
            The signal and a provenance comment (set for noisy signals)
        """
        if n < 1:
            raise DataValidationError(f"Need at least one sample, got n={n}")
        if not dt > 0:
            raise DataValidationError(f"Sample step must be positive, got dt={dt}")
        kind = SynthKind(kind)
        t = t0 + dt * np.arange(n)

        comment = None
        if kind == SynthKind.NOISY:
            clean = self._clean(SynthKind(base), t, mix)
            values, comment = self._add_noise(clean, snr_db, seed)
        else:
            values = self._clean(kind, t, mix)

        logger.info(f"Synthesized {kind.value} signal: {n} samples from t={t0:g} step {dt:g}")
        return SampledSignal(float(t0), float(dt), values), comment

    def _clean(self, kind: SynthKind, t: np.ndarray, mix: Optional[str]) -> np.ndarray:
        mid = 0.5 * (t[0] + t[-1])
        tau = t - mid
        if kind == SynthKind.GAUSSIAN_PULSE:
            return np.exp(-0.5 * tau * tau)
        if kind == SynthKind.CHIRP:
            width = max((t[-1] - t[0]) / 8.0, np.finfo(float).eps)
            return np.exp(-0.5 * (tau / width) ** 2) * np.cos(tau + 0.5 * tau * tau)
        if kind == SynthKind.HERMITE_MIX:
            weights = parse_mix(mix or "")
            rows = hermite_fn_matrix(max(weights), t)
            return sum(w * rows[n] for n, w in weights.items())
        raise DataValidationError(f"'{kind.value}' cannot be used as a clean signal")

    @staticmethod
    def _add_noise(clean: np.ndarray, snr_db: float, seed: int) -> Tuple[np.ndarray, str]:
        rng = np.random.Generator(np.random.PCG64(seed))
        power = float(np.mean(np.abs(clean) ** 2))
        sigma = np.sqrt(power / 10.0 ** (snr_db / 10.0))
        noisy = clean + sigma * rng.standard_normal(clean.shape)
        return noisy, f"rng={RNG_ALGORITHM} seed={seed} snr_db={snr_db:g}"
