"""Filter plan, report and HTTP request models."""
import math
from enum import Enum
from typing import Annotated, Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.config import get_config
from src.exceptions import PlanValidationError
from src.models.basis_models import KernelSign


class PlanBasis(str, Enum):
    """Basis a plan projects onto."""
    HERMITE = "hermite"
    LAGUERRE_PLUS = "laguerre_plus"    # cos kernel, alpha = -1/2
    LAGUERRE_MINUS = "laguerre_minus"  # sin kernel, alpha = +1/2

    @property
    def kernel_sign(self) -> Optional[KernelSign]:
        return {
            PlanBasis.LAGUERRE_PLUS: KernelSign.PLUS,
            PlanBasis.LAGUERRE_MINUS: KernelSign.MINUS,
        }.get(self)


class SynthKind(str, Enum):
    """Synthetic signal families."""
    GAUSSIAN_PULSE = "gaussian_pulse"
    CHIRP = "chirp"
    HERMITE_MIX = "hermite_mix"
    NOISY = "noisy"


class Window(BaseModel):
    """Affine map t -> x = (t - center) / scale."""
    center: float = 0.0
    scale: float = Field(1.0, gt=0, description="Must be strictly positive")


class TruncateStep(BaseModel):
    """Zero every coefficient above nmax."""
    op: Literal["truncate"]
    nmax: int = Field(..., ge=0)


class KeepSubspacesStep(BaseModel):
    """Keep the (k, r) subspaces for the listed residues r."""
    op: Literal["keep_subspaces"]
    k: int = Field(..., ge=1)
    r: List[int] = Field(..., min_length=1)

    @model_validator(mode="after")
    def residues_below_k(self):
        bad = [r for r in self.r if not 0 <= r < self.k]
        if bad:
            raise ValueError(f"residues {bad} must satisfy 0 <= r < k={self.k}")
        return self


class FrftStep(BaseModel):
    """Fractional transform of order a (Hermite FrFT or half-line fractional power)."""
    op: Literal["frft"]
    a: float

    @field_validator("a")
    @classmethod
    def finite_order(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("transform order must be finite")
        return v


class TInvolutionStep(BaseModel):
    """Half-line cosine/sine transform; needs a Laguerre basis."""
    op: Literal["t_involution"]


def _first_error(error: ValidationError) -> Tuple[str, str]:
    """(dotted field path, message) of the first validation error."""
    first = error.errors()[0]
    field = ".".join(str(part) for part in first["loc"])
    message = first["msg"].removeprefix("Value error, ")
    if not field:
        # Plan-level validators prefix their message with the field path
        field, _, rest = message.partition(": ")
        message = rest or message
    return field or "plan", message


Step = Annotated[
    Union[TruncateStep, KeepSubspacesStep, FrftStep, TInvolutionStep],
    Field(discriminator="op"),
]


class FilterPlan(BaseModel):
    """A filtering pipeline over one basis."""
    basis: PlanBasis = PlanBasis.HERMITE
    modes: int = Field(default_factory=lambda: get_config().FILTER_DEFAULT_MODES, ge=1)
    window: Optional[Window] = None
    steps: List[Step] = Field(default_factory=list)

    @model_validator(mode="after")
    def steps_fit_basis(self):
        for i, step in enumerate(self.steps):
            if isinstance(step, TruncateStep) and step.nmax >= self.modes:
                raise ValueError(f"steps.{i}.nmax: {step.nmax} must be below modes={self.modes}")
            if isinstance(step, TInvolutionStep) and self.basis == PlanBasis.HERMITE:
                raise ValueError(f"steps.{i}.op: t_involution requires a laguerre basis")
        return self

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FilterPlan":
        """Validate a plan document, naming the first offending field on failure."""
        try:
            return cls.model_validate(data)
        except ValidationError as e:
            field, message = _first_error(e)
            raise PlanValidationError(field, message) from e

    class Config:
        """Pydantic config."""
        json_schema_extra = {
            "example": {
                "basis": "hermite",
                "modes": 64,
                "window": {"center": 0.0, "scale": 1.0},
                "steps": [
                    {"op": "keep_subspaces", "k": 2, "r": [0]},
                    {"op": "frft", "a": 1.0},
                ],
            }
        }


class FilterReport(BaseModel):
    """Energy bookkeeping of one filter run."""
    input_energy: float
    output_energy: float
    per_subspace_energy: Dict[str, float] = Field(default_factory=dict, description='Keyed "k:r"')
    residual_l2: float = Field(..., description="Relative L2 error of the unfiltered round trip")
    coefficient_tail: float = Field(..., description="|a_{N-1}| of the input coefficients")
    tool_version: str


class SignalPayload(BaseModel):
    """Sampled signal over the wire: real and imaginary parts on a uniform t grid."""
    t: List[float] = Field(..., min_length=1)
    value: List[float]
    value_imag: Optional[List[float]] = None

    @model_validator(mode="after")
    def same_lengths(self):
        if len(self.value) != len(self.t):
            raise ValueError("t and value must have the same length")
        if self.value_imag is not None and len(self.value_imag) != len(self.t):
            raise ValueError("t and value_imag must have the same length")
        return self


class FilterRequest(BaseModel):
    """Request model for POST /v1/filter."""
    plan: FilterPlan
    signal: SignalPayload


class FilterResponse(BaseModel):
    signal: SignalPayload
    report: FilterReport


class SynthRequest(BaseModel):
    """Request model for POST /v1/synth."""
    kind: SynthKind
    n: int = Field(512, ge=1)
    t0: float = -8.0
    dt: float = Field(0.03125, gt=0)
    mix: Optional[str] = Field(None, description='hermite_mix weights, "n:w,n:w"')
    base: SynthKind = SynthKind.GAUSSIAN_PULSE
    snr_db: float = 20.0
    seed: int = 0

    @field_validator("base")
    @classmethod
    def base_not_noisy(cls, v: SynthKind) -> SynthKind:
        if v == SynthKind.NOISY:
            raise ValueError("noisy signals need a clean base kind")
        return v
