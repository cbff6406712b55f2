"""Filter pipeline service: window, project, filter, reconstruct, report."""
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from src import __version__
from src.config import get_config
from src.core.frft import project_subspace
from src.core.halfline import alpha_for, basis_for
from src.core.spectral import energy, fit_hermite, fit_laguerre, synthesize
from src.data_loader import DataLoader
from src.exceptions import BaseAppException, DataProcessingError, DataValidationError
from src.logger import get_logger
from src.models.basis_models import Basis, BasisKind, CoeffVec, SampledSignal, SubspaceLabel
from src.models.plan_models import (
    FilterPlan,
    FilterReport,
    FrftStep,
    KeepSubspacesStep,
    PlanBasis,
    TInvolutionStep,
    TruncateStep,
    Window,
)
from src.processors import (
    BaseProcessor,
    FrftProcessor,
    InvolutionProcessor,
    SubspaceProcessor,
    TruncateProcessor,
)

logger = get_logger(__name__)


class FilterService:
    """Service running filter plans on sampled signals."""

    def __init__(self):
        """Initialize filter service."""
        self.config = get_config()
        self.data_loader = DataLoader()
        logger.info("FilterService initialized")

    def run(
        self,
        plan: FilterPlan,
        input_path: Union[str, Path],
        output_path: Union[str, Path],
        report_path: Optional[Union[str, Path]] = None,
        t0: Optional[float] = None,
        dt: Optional[float] = None,
    ) -> FilterReport:
        """
        Filter a CSV signal and write the result (and optionally the report).

        Args:
            plan: Validated filter plan
            input_path: CSV with the sampled input
            output_path: Destination CSV, same layout as the input
            report_path: Optional JSON report destination
            t0: Grid origin for single-column input
            dt: Grid step for single-column input

        Returns:
            FilterReport of the run
        """
        signal = self.data_loader.load_signal(input_path, t0=t0, dt=dt)
        filtered, report = self.filter_signal(plan, signal)
        self.data_loader.write_signal(output_path, filtered)
        if report_path is not None:
            self.data_loader.write_report(report_path, report.model_dump())
        logger.info(
            f"Filter run complete: energy {report.input_energy:.6g} -> {report.output_energy:.6g}, "
            f"residual {report.residual_l2:.3e}"
        )
        return report

    def filter_signal(self, plan: FilterPlan, signal: SampledSignal) -> Tuple[SampledSignal, FilterReport]:
        """
        Apply a plan to an in-memory signal.

        Args:
            plan: Validated filter plan
            signal: Samples on a uniform t grid

        Returns:
            Filtered samples on the same grid, and the report
        """
        basis = self.plan_basis(plan)
        window = plan.window or self.default_window(plan, signal.grid)
        windowed = self.apply_window(signal, window, basis)
        logger.info(
            f"Projecting {len(signal)} samples onto {plan.modes} {basis} modes "
            f"(center={window.center:.6g}, scale={window.scale:.6g})"
        )

        try:
            coeffs = self.project(windowed, plan.modes, basis)
            reconstructed = synthesize(coeffs, windowed.grid).values
            # M_n^alpha is singular at y = 0 for alpha < 0
            regular = np.isfinite(reconstructed)
            residual = self.relative_l2(reconstructed[regular], windowed.values[regular])

            filtered = coeffs
            for processor in self.build_processors(plan):
                filtered = processor.safe_process(filtered)

            output = synthesize(filtered, windowed.grid).values
            if not np.all(regular):
                logger.warning(f"{int((~regular).sum())} output sample(s) sit on the Laguerre singularity; written as 0")
                output = np.where(regular, output, 0.0)
        except BaseAppException:
            raise
        except Exception as e:
            logger.error(f"Filter pipeline failed: {e}")
            raise DataProcessingError(f"Filter pipeline failed: {e}")

        report = FilterReport(
            input_energy=energy(coeffs),
            output_energy=energy(filtered),
            per_subspace_energy=self.subspace_energies(coeffs, self.report_moduli(plan)),
            residual_l2=residual,
            coefficient_tail=float(abs(coeffs.values[-1])),
            tool_version=__version__,
        )
        return SampledSignal(signal.x0, signal.dx, output), report

    @staticmethod
    def plan_basis(plan: FilterPlan) -> Basis:
        if plan.basis == PlanBasis.HERMITE:
            return Basis.hermite()
        return basis_for(plan.basis.kernel_sign)

    def default_window(self, plan: FilterPlan, t: np.ndarray) -> Window:
        """
        Window mapping the sample span onto the support of the first `modes` functions.

        Hermite: center at the mean of t, farthest sample at sqrt(2N+1).
        Laguerre: origin half a sample step before the first sample, so no sample
        lands on y = 0, and the last sample at 4N + 2 alpha + 2.
        """
        n = plan.modes
        if plan.basis == PlanBasis.HERMITE:
            center = float(np.mean(t))
            reach = float(np.max(np.abs(t - center)))
            support = np.sqrt(2.0 * n + 1.0)
        else:
            step = float(t[1] - t[0]) if len(t) > 1 else 0.0
            center = float(np.min(t)) - 0.5 * step
            reach = float(np.max(t) - center)
            support = 4.0 * n + 2.0 * alpha_for(plan.basis.kernel_sign) + 2.0
        scale = reach / support if reach > 0 else 1.0
        return Window(center=center, scale=scale)

    @staticmethod
    def apply_window(signal: SampledSignal, window: Window, basis: Basis) -> SampledSignal:
        """Re-express the samples on x = (t - center) / scale."""
        x0 = (signal.x0 - window.center) / window.scale
        windowed = SampledSignal(x0, signal.dx / window.scale, signal.values)
        if basis.kind == BasisKind.LAGUERRE and np.min(windowed.grid) < 0:
            raise DataValidationError(
                f"Laguerre basis needs samples at x >= 0; window maps t={signal.x0:.6g} to x={x0:.6g}"
            )
        return windowed

    @staticmethod
    def project(windowed: SampledSignal, modes: int, basis: Basis) -> CoeffVec:
        if basis.kind == BasisKind.HERMITE:
            return fit_hermite(windowed, modes)
        return fit_laguerre(windowed, modes, basis.alpha)

    @staticmethod
    def relative_l2(approx: np.ndarray, exact: np.ndarray) -> float:
        scale = float(np.linalg.norm(exact))
        error = float(np.linalg.norm(approx - exact))
        return error / scale if scale > 0 else error

    @staticmethod
    def build_processors(plan: FilterPlan) -> List[BaseProcessor]:
        """One processor per plan step, in order."""
        sign = plan.basis.kernel_sign
        processor_map = {
            TruncateStep: lambda step: TruncateProcessor(step.nmax),
            KeepSubspacesStep: lambda step: SubspaceProcessor(step.k, step.r),
            FrftStep: lambda step: FrftProcessor(step.a, sign),
            TInvolutionStep: lambda step: InvolutionProcessor(sign),
        }
        return [processor_map[type(step)](step) for step in plan.steps]

    def report_moduli(self, plan: FilterPlan) -> List[int]:
        ks = sorted({step.k for step in plan.steps if isinstance(step, KeepSubspacesStep)})
        return ks or [self.config.REPORT_DEFAULT_K]

    @staticmethod
    def subspace_energies(coeffs: CoeffVec, moduli: List[int]) -> dict:
        """Energy of `coeffs` in every (k, r) subspace, keyed "k:r"."""
        energies = {}
        for k in moduli:
            for r in range(k):
                label = SubspaceLabel(k, r)
                energies[label.key()] = energy(project_subspace(coeffs, label))
        return energies
