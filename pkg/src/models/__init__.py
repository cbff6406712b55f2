"""Value types and request/plan models."""
from src.models.basis_models import (
    Basis,
    BasisKind,
    ChiSeq,
    CircleFunc,
    CoeffVec,
    KernelSign,
    QRLabel,
    QuadRule,
    RuleKind,
    SampledSignal,
    SubspaceLabel,
)
from src.models.plan_models import FilterPlan, FilterReport, PlanBasis, SynthKind

__all__ = [
    'Basis',
    'BasisKind',
    'ChiSeq',
    'CircleFunc',
    'CoeffVec',
    'KernelSign',
    'QRLabel',
    'QuadRule',
    'RuleKind',
    'SampledSignal',
    'SubspaceLabel',
    'FilterPlan',
    'FilterReport',
    'PlanBasis',
    'SynthKind',
]
