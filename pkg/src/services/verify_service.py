"""Embedded invariant suite run by `filter verify` and GET /v1/verify."""
import math
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional

import numpy as np

from src.config import get_config
from src.core import algebra, circle, frft, halfline, quadrature, specfun
from src.core.spectral import energy
from src.exceptions import NumericalError
from src.logger import get_logger
from src.models.basis_models import Basis, CoeffVec, KernelSign, SubspaceLabel
from src.models.plan_models import FilterPlan, SynthKind
from src.services.filter_service import FilterService
from src.services.synth_service import SynthService

logger = get_logger(__name__)


@dataclass
class CheckResult:
    """Outcome of one invariant check; `measured` is the worst deviation seen."""
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""

    def to_dict(self) -> Dict[str, object]:
        return asdict(self)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.measured:.3e} (tol {self.tolerance:.1e})"
        return f"{text} {self.detail}".rstrip()


def _result(name: str, measured: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(measured < tolerance), float(measured), tolerance, detail)


class VerifyService:
    """Runs the desk-scale invariant checks behind `filter verify`."""

    def __init__(self):
        self.config = get_config()
        self.checks: Dict[str, Callable[[], CheckResult]] = {
            "orthonormality": self.check_orthonormality,
            "fourier_eigen": self.check_fourier_eigen,
            "frft_laws": self.check_frft_laws,
            "subspace_split": self.check_subspace_split,
            "halfline": self.check_halfline,
            "bridge": self.check_bridge,
            "algebra": self.check_algebra,
            "circle": self.check_circle,
            "de_order": self.check_de_order,
            "pipeline": self.check_pipeline,
        }

    def run_all(self, names: Optional[List[str]] = None) -> List[CheckResult]:
        """Run the named checks (all by default); a raised numerical error counts as a failure."""
        results = []
        for name in names or list(self.checks):
            try:
                result = self.checks[name]()
            except NumericalError as e:
                logger.error(f"Check '{name}' raised: {e}")
                result = CheckResult(name, False, math.inf, 0.0, f"raised {e.__class__.__name__}: {e}")
            log = logger.info if result.passed else logger.warning
            log(result.line())
            results.append(result)
        return results

    def check_orthonormality(self) -> CheckResult:
        rule = quadrature.gauss_hermite(128)
        rows = specfun.hermite_fn_matrix(50, rule.nodes)
        worst = np.max(np.abs((rows * rule.weights) @ rows.T - np.eye(51)))
        moments = quadrature.moment_error(rule)
        for alpha in (-0.5, 0.0, 0.5):
            rule = quadrature.gauss_laguerre(96, alpha)
            rows = specfun.laguerre_fn_matrix(40, alpha, rule.nodes)
            worst = max(worst, np.max(np.abs((rows * rule.weights) @ rows.T - np.eye(41))))
            moments = max(moments, quadrature.moment_error(rule))
        return _result("orthonormality", max(worst, moments), 1e-10, f"zeroth moments {moments:.3e}")

    def check_fourier_eigen(self) -> CheckResult:
        rule = quadrature.gauss_hermite(128, math.sqrt(2.0))
        worst = 0.0
        for n in range(31):
            f = lambda x, n=n: specfun.hermite_fn_matrix(n, x)[n]
            for p in (0.0, 0.7, -0.7, 2.3, -2.3, 5.0, -5.0):
                expected = 1j ** n * specfun.hermite_fn(n, p)
                worst = max(worst, abs(frft.fourier_quadrature(f, p, rule) - expected))
        return _result("fourier_eigen", worst, 1e-8)

    def check_frft_laws(self) -> CheckResult:
        rng = np.random.Generator(np.random.PCG64(11))
        c = CoeffVec(Basis.hermite(), rng.standard_normal(32) + 1j * rng.standard_normal(32))
        exact = np.array_equal(frft.frft(frft.frft(c, 1.0), 3.0).values, c.values)
        exact &= np.array_equal(frft.frft(c, 4.0).values, c.values)
        worst = np.max(np.abs(frft.frft(frft.frft(c, 0.3), 0.5).values - frft.frft(c, 0.8).values))

        mix = CoeffVec(Basis.hermite(), [0.0, 0.0, 1.0, 0.5, 0.0, 0.0, -0.25])
        rule = quadrature.gauss_hermite(128, math.sqrt(2.0))
        f = lambda x: specfun.hermite_fn_matrix(6, x)[2:7].T @ mix.values[2:7]
        momenta = np.linspace(-6.0, 6.0, 25)
        spectral = frft.fourier_transform_synthesized(mix, momenta)
        oracle = np.array([frft.fourier_quadrature(f, p, rule) for p in momenta])
        worst = max(worst, np.max(np.abs(spectral - oracle)))
        if not exact:
            return CheckResult("frft_laws", False, float(worst), 1e-9, "quarter-turn group law not exact")
        return _result("frft_laws", worst, 1e-9)

    def check_subspace_split(self) -> CheckResult:
        rng = np.random.Generator(np.random.PCG64(5))
        c = CoeffVec(Basis.hermite(), rng.standard_normal(48) + 1j * rng.standard_normal(48))
        worst = 0.0
        for k in range(1, 9):
            parts = frft.decompose(c, k)
            if not np.array_equal(sum(p.values for p in parts), c.values):
                return CheckResult("subspace_split", False, math.inf, 1e-12, f"parts do not sum to c for k={k}")
            for r, part in enumerate(parts):
                eigen = frft.subspace_eigenvalue(SubspaceLabel(k, r))
                worst = max(worst, np.max(np.abs(frft.frft(part, 4.0 / k).values - eigen * part.values)))
            worst = max(worst, abs(sum(energy(p) for p in parts) - energy(c)))
        return _result("subspace_split", worst, 1e-12)

    def check_halfline(self) -> CheckResult:
        m = self.config.HALFLINE_QUAD_POINTS
        worst = 0.0
        for sign in KernelSign:
            alpha = halfline.alpha_for(sign)
            for n in range(13):
                f = lambda y, n=n: specfun.laguerre_fn_matrix(n, alpha, y)[n]
                for s in (0.25, 1.0, 4.0, 9.0):
                    expected = (-1) ** n * specfun.laguerre_fn(n, alpha, s)
                    worst = max(worst, abs(halfline.t_transform_quadrature(f, sign, s, m) - expected))
        return _result("halfline", worst, 1e-6)

    def check_bridge(self) -> CheckResult:
        worst = 0.0
        for n in range(21):
            for x in np.linspace(-8.0, 8.0, 33):
                for odd in (False, True):
                    lhs, rhs = specfun.hermite_laguerre_bridge(n, x, odd=odd)
                    worst = max(worst, abs(lhs - rhs))
        return _result("bridge", worst, 1e-10)

    def check_algebra(self) -> CheckResult:
        size = 96
        a, ad, num = algebra.annihilation(), algebra.creation(), algebra.number()
        cases = [
            (a, ad, algebra.identity()),
            (num, a, algebra.scaled(a, -1.0)),
            (num, ad, ad),
            (algebra.position(), algebra.momentum(), algebra.scaled(algebra.identity(), 1j)),
        ]
        for k, r in ((2, 0), (3, 1), (4, 3)):
            up, down = algebra.subspace_raise(k, r), algebra.subspace_lower(k, r)
            q = algebra.q_operator(k)
            cases += [
                (q, up, up),
                (q, down, algebra.scaled(down, -1.0)),
                (down, up, algebra.subspace_identity(k, r)),
            ]
        for alpha in (-0.5, 0.5, 2.0):
            jp, jm, j3 = algebra.su11_raise(alpha), algebra.su11_lower(alpha), algebra.su11_j3(alpha)
            cases += [(j3, jp, jp), (j3, jm, algebra.scaled(jm, -1.0)), (jp, jm, algebra.scaled(j3, -2.0))]
        worst = max(
            algebra.commutator_residual(op_a, op_b, expected, size, op_a.reach + op_b.reach)
            for op_a, op_b, expected in cases
        )

        for alpha in (-0.5, 0.5, 1.0):
            basis = Basis.laguerre(alpha)
            for n in range(size - 1):
                c = CoeffVec.unit(basis, size, n)
                casimir = algebra.casimir_su11(alpha, c).values
                # J3^2 sets the size of the cancelling terms
                scale = max(1.0, (n + (alpha + 1.0) / 2.0) ** 2)
                worst = max(worst, np.max(np.abs(casimir - (alpha * alpha - 1.0) / 4.0 * c.values)) / scale)

        worst_y = 0.0
        for alpha in (-0.5, 0.5):
            rule = quadrature.gauss_laguerre(64, alpha)
            c = CoeffVec(Basis.laguerre(alpha), [0.3, 1.0, -0.5, 0.25, 0.0, 0.1])
            worst_y = max(worst_y, algebra.y_operator_check(alpha, c, rule))
        passed = worst < 1e-12 and worst_y < 1e-9
        return CheckResult("algebra", passed, float(worst), 1e-12, f"Y identity {worst_y:.3e} (tol 1.0e-09)")

    def check_circle(self) -> CheckResult:
        angles = np.linspace(-math.pi, math.pi, 64, endpoint=False)
        worst = 0.0
        for n in range(21):
            direct = circle.periodized_hermite_direct(n, angles)
            series = circle.periodized_hermite_fourier(n, angles, 30)
            worst = max(worst, np.max(np.abs(direct - series)))

        gram = circle.gram_matrix(11, 30)
        grid = 128
        for n in range(11):
            for m in range(n, 11):
                direct = circle.circle_inner_product(
                    lambda phi, n=n: circle.periodized_hermite_direct(n, phi),
                    lambda phi, m=m: circle.periodized_hermite_direct(m, phi),
                    grid,
                )
                worst = max(worst, abs(direct - gram[n, m]))

        for N in range(7):
            for mode in ("full", "half"):
                det = circle.hermite_integer_det(N, mode)
                if det == 0:
                    return CheckResult("circle", False, math.inf, 1e-8, f"singular {mode} determinant at N={N}")
                if det != circle.hermite_vandermonde_det(N, mode):
                    return CheckResult(
                        "circle", False, math.inf, 1e-8, f"{mode} determinant at N={N} disagrees with its Vandermonde form"
                    )

        q = np.array(circle.chi_gram_schmidt(10, 30))
        orthogonality = float(np.max(np.abs(q.conj() @ q.T - np.eye(10))))
        passed = worst < 1e-8 and orthogonality < 1e-12
        return CheckResult("circle", passed, float(worst), 1e-8, f"Gram-Schmidt {orthogonality:.3e} (tol 1.0e-12)")

    @staticmethod
    def _fourth_derivative(n: int, x: np.ndarray) -> np.ndarray:
        """K'''' = 2K + 4x K' + (x^2 - (2n+1))^2 K, from the Hermite equation."""
        k = specfun.hermite_fn_matrix(n, x)[n]
        dk = specfun.hermite_fn_derivative(n, x)
        return 2.0 * k + 4.0 * x * dk + (x * x - (2 * n + 1)) ** 2 * k

    def check_de_order(self) -> CheckResult:
        steps = (1e-2, 5e-3, 2.5e-3)
        worst = 0.0
        for n in range(31):
            candidates = np.linspace(0.05, math.sqrt(2 * n + 1) + 1.0, 97)
            x = float(candidates[np.argmax(np.abs(self._fourth_derivative(n, candidates)))])
            residuals = [abs(specfun.hermite_de_residual(n, x, h)) for h in steps]
            for coarse, fine in zip(residuals, residuals[1:]):
                worst = max(worst, abs(math.log2(coarse / fine) - 2.0))
        return _result("de_order", worst, 0.1)

    def check_pipeline(self) -> CheckResult:
        service, synth = FilterService(), SynthService()
        mix, _ = synth.synth_signal(SynthKind.HERMITE_MIX, 513, -8.0, 1.0 / 32.0, mix="2:1,5:1")
        plan = FilterPlan.from_dict({"basis": "hermite", "modes": 64,
                                     "steps": [{"op": "keep_subspaces", "k": 2, "r": [0]}]})
        _, report = service.filter_signal(plan, mix)
        ratio_error = abs(report.output_energy / report.input_energy - 0.5)

        pulse, _ = synth.synth_signal(SynthKind.GAUSSIAN_PULSE, 512, -8.0, 1.0 / 32.0)
        output, _ = service.filter_signal(FilterPlan.from_dict({"basis": "hermite", "modes": 64}), pulse)
        round_trip = FilterService.relative_l2(output.values, pulse.values)
        passed = ratio_error < 1e-10 and round_trip < 1e-6
        return CheckResult("pipeline", passed, float(ratio_error), 1e-10, f"round trip {round_trip:.3e} (tol 1.0e-06)")
