"""Ladder and Lie-algebra operators acting on truncated coefficient vectors.

Every operator is a BandedOp: a list of (offset, coefficient(n)) bands with
(op e_n) = sum_bands coefficient(n) e_{n+offset}. On a length-N vector, images
that land outside [0, N) are dropped, so identities between operators are only
asserted on the truncation interior (indices far enough from N).

Number operator convention: N = a^+ a, so N e_n = n e_n.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence, Tuple

import numpy as np

from src.core.spectral import evaluate
from src.exceptions import ContractViolationError, DomainError
from src.logger import get_logger
from src.models.basis_models import Basis, BasisKind, CoeffVec, QRLabel, QuadRule

logger = get_logger(__name__)

Coefficient = Callable[[np.ndarray], np.ndarray]


class OscillatorOp(str, Enum):
    A = "A"
    ADAG = "Adag"
    NUM = "Num"
    X = "X"
    P = "P"
    ID = "Id"


class LadderDirection(str, Enum):
    RAISE = "raise"
    LOWER = "lower"


class Su11Op(str, Enum):
    JPLUS = "Jplus"
    JMINUS = "Jminus"
    J3 = "J3"


@dataclass(frozen=True)
class BandedOp:
    """Operator given by its bands (offset, coefficient of the source index)."""
    name: str
    bands: Tuple[Tuple[int, Coefficient], ...]

    @property
    def reach(self) -> int:
        return max((abs(offset) for offset, _ in self.bands), default=0)

    def apply(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values, dtype=complex)
        size = values.shape[0]
        n = np.arange(size)
        out = np.zeros(size, dtype=complex)
        for offset, coefficient in self.bands:
            target = n + offset
            keep = (target >= 0) & (target < size)
            out[target[keep]] += np.asarray(coefficient(n[keep]), dtype=complex) * values[keep]
        return out

    def matrix(self, size: int) -> np.ndarray:
        """Dense truncated matrix; column n is the image of e_n."""
        mat = np.zeros((size, size), dtype=complex)
        n = np.arange(size)
        for offset, coefficient in self.bands:
            target = n + offset
            keep = (target >= 0) & (target < size)
            mat[target[keep], n[keep]] += np.asarray(coefficient(n[keep]), dtype=complex)
        return mat

    def __call__(self, c: CoeffVec) -> CoeffVec:
        return c.with_values(self.apply(c.values))


def _const(value: complex) -> Coefficient:
    return lambda n: np.full(n.shape, value, dtype=complex)


def scaled(op: BandedOp, factor: complex, name: str = "") -> BandedOp:
    bands = tuple((offset, (lambda f: lambda n: factor * f(n))(coef)) for offset, coef in op.bands)
    return BandedOp(name or f"{factor}*{op.name}", bands)


def sum_op(*ops: BandedOp, name: str = "") -> BandedOp:
    bands = tuple(band for op in ops for band in op.bands)
    return BandedOp(name or "+".join(op.name for op in ops), bands)


# Oscillator algebra

def annihilation() -> BandedOp:
    return BandedOp("a", ((-1, lambda n: np.sqrt(n)),))


def creation() -> BandedOp:
    return BandedOp("a+", ((1, lambda n: np.sqrt(n + 1.0)),))


def number() -> BandedOp:
    return BandedOp("N", ((0, lambda n: n.astype(float)),))


def identity() -> BandedOp:
    return BandedOp("I", ((0, _const(1.0)),))


def position() -> BandedOp:
    """X = (a + a^+)/sqrt(2)."""
    return scaled(sum_op(annihilation(), creation()), 1 / math.sqrt(2.0), "X")


def momentum() -> BandedOp:
    """P = (a - a^+)/(i sqrt(2))."""
    return sum_op(
        scaled(annihilation(), -1j / math.sqrt(2.0)),
        scaled(creation(), 1j / math.sqrt(2.0)),
        name="P",
    )


_OSCILLATOR = {
    OscillatorOp.A: annihilation,
    OscillatorOp.ADAG: creation,
    OscillatorOp.NUM: number,
    OscillatorOp.X: position,
    OscillatorOp.P: momentum,
    OscillatorOp.ID: identity,
}


def oscillator_apply(op: OscillatorOp, c: CoeffVec) -> CoeffVec:
    """Apply a, a^+, N, X, P or I to Hermite coefficients."""
    c.require_kind(BasisKind.HERMITE)
    return _OSCILLATOR[OscillatorOp(op)]()(c)


# Q/R labelling and the A_{k,r} family

def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")


def _check_kr(k: int, r: int) -> None:
    _check_k(k)
    if not 0 <= r < k:
        raise DomainError(f"r must satisfy 0 <= r < k, got r={r}, k={k}")


def qr_split(k: int, n: int) -> QRLabel:
    """n = k*q + r with 0 <= r < k."""
    _check_k(k)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")
    q, r = divmod(int(n), int(k))
    return QRLabel(int(k), q, r)


def q_operator(k: int) -> BandedOp:
    _check_k(k)
    return BandedOp(f"Q[{k}]", ((0, lambda n: (n // k).astype(float)),))


def r_operator(k: int) -> BandedOp:
    _check_k(k)
    return BandedOp(f"R[{k}]", ((0, lambda n: (n % k).astype(float)),))


def q_apply(k: int, c: CoeffVec) -> CoeffVec:
    """Scale each e_n by its quotient label q = n div k."""
    c.require_kind(BasisKind.HERMITE)
    return q_operator(k)(c)


def r_apply(k: int, c: CoeffVec) -> CoeffVec:
    """Scale each e_n by its residue label r = n mod k."""
    c.require_kind(BasisKind.HERMITE)
    return r_operator(k)(c)


def subspace_identity(k: int, r: int) -> BandedOp:
    """Orthogonal projector onto span{e_n : n = r mod k}."""
    _check_kr(k, r)
    return BandedOp(f"I[{k},{r}]", ((0, lambda n: (n % k == r).astype(float)),))


def subspace_raise(k: int, r: int) -> BandedOp:
    """A^+_{k,r} e_{kq+r} = sqrt(q+1) e_{k(q+1)+r}; zero off the (k, r) subspace."""
    _check_kr(k, r)
    return BandedOp(f"A+[{k},{r}]", ((k, lambda n: np.where(n % k == r, np.sqrt(n // k + 1.0), 0.0)),))


def subspace_lower(k: int, r: int) -> BandedOp:
    """A_{k,r} e_{kq+r} = sqrt(q) e_{k(q-1)+r}; zero off the (k, r) subspace."""
    _check_kr(k, r)
    return BandedOp(f"A[{k},{r}]", ((-k, lambda n: np.where(n % k == r, np.sqrt(n // k * 1.0), 0.0)),))


def subspace_ladder_apply(k: int, r: int, direction: LadderDirection, c: CoeffVec) -> CoeffVec:
    """Step within the (k, r) subspace by +-k with the sqrt(q) factors."""
    c.require_kind(BasisKind.HERMITE)
    _check_kr(k, r)
    if LadderDirection(direction) == LadderDirection.RAISE:
        return subspace_raise(k, r)(c)
    return subspace_lower(k, r)(c)


def _ratio_diagonal(k: int, r: int, n: np.ndarray) -> np.ndarray:
    """sqrt(N+k-r) / sqrt(k prod_{j=1..k}(N+j)) evaluated at index n."""
    prod = np.ones(n.shape)
    for j in range(1, k + 1):
        prod *= n + j
    return np.sqrt(np.maximum(n + k - r, 0) / (k * prod))


def ladder_ratio_form_apply(k: int, r: int, direction: LadderDirection, c: CoeffVec) -> CoeffVec:
    """A_{k,r} built as diag * a^k and A^+_{k,r} as (a^+)^k * diag.

    Agrees with subspace_ladder_apply on inputs supported in the (k, r) subspace.
    """
    c.require_kind(BasisKind.HERMITE)
    _check_kr(k, r)
    values = np.asarray(c.values, dtype=complex)
    n = np.arange(values.shape[0])
    if LadderDirection(direction) == LadderDirection.RAISE:
        values = _ratio_diagonal(k, r, n) * values
        for _ in range(k):
            values = creation().apply(values)
    else:
        for _ in range(k):
            values = annihilation().apply(values)
        values = _ratio_diagonal(k, r, n) * values
    return c.with_values(values)


# su(1,1) on the Laguerre basis

def su11_raise(alpha: float) -> BandedOp:
    return BandedOp("J+", ((1, lambda n: np.sqrt((n + 1.0) * (n + alpha + 1.0))),))


def su11_lower(alpha: float) -> BandedOp:
    return BandedOp("J-", ((-1, lambda n: np.sqrt(n * (n + alpha))),))


def su11_j3(alpha: float) -> BandedOp:
    return BandedOp("J3", ((0, lambda n: n + (alpha + 1.0) / 2.0),))


_SU11 = {Su11Op.JPLUS: su11_raise, Su11Op.JMINUS: su11_lower, Su11Op.J3: su11_j3}


def su11_apply(op: Su11Op, c: CoeffVec) -> CoeffVec:
    """J+, J- or J3 on Laguerre(alpha) coefficients."""
    c.require_kind(BasisKind.LAGUERRE)
    return _SU11[Su11Op(op)](c.basis.alpha)(c)


def casimir_su11(alpha: float, c: CoeffVec) -> CoeffVec:
    """J3^2 c - (J+ J- c + J- J+ c)/2."""
    c.require(Basis.laguerre(alpha))
    j3, jp, jm = su11_j3(alpha), su11_raise(alpha), su11_lower(alpha)
    v = c.values
    result = j3.apply(j3.apply(v)) - 0.5 * (jp.apply(jm.apply(v)) + jm.apply(jp.apply(v)))
    return c.with_values(result)


def commutator_residual(
    op_a: BandedOp,
    op_b: BandedOp,
    expected: BandedOp,
    size: int,
    interior_margin: int,
) -> float:
    """max over interior e_n of ||(AB - BA - expected) e_n||, relative to the products.

    Each column is divided by max(1, ||AB e_n|| + ||BA e_n||): near index N the two
    products are O(N^2) and cancel, so only a scale-relative residual can reach
    machine precision. Interior means n < size - interior_margin; below index 0
    the truncated action is exact, so only the top edge is excluded.
    """
    required = op_a.reach + op_b.reach
    if interior_margin < required:
        raise ContractViolationError(
            f"Margin {interior_margin} lets truncation leak into index {size - required} "
            f"(composition reach {required})"
        )
    if interior_margin >= size:
        raise ContractViolationError(f"Margin {interior_margin} leaves no interior in size {size}")
    a = op_a.matrix(size)
    b = op_b.matrix(size)
    ab, ba = a @ b, b @ a
    defect = ab - ba - expected.matrix(size)
    scale = np.maximum(1.0, np.linalg.norm(ab, axis=0) + np.linalg.norm(ba, axis=0))
    interior = slice(0, size - interior_margin)
    residual = float(np.max(np.linalg.norm(defect[:, interior], axis=0) / scale[interior]))
    logger.debug(f"[{op_a.name}, {op_b.name}] - {expected.name}: residual {residual:.3e}")
    return residual


def y_multiplication(alpha: float) -> BandedOp:
    """Y = -(J+ + J-) + 2N + (alpha+1) I on the Laguerre(alpha) basis."""
    return sum_op(
        scaled(su11_raise(alpha), -1.0),
        scaled(su11_lower(alpha), -1.0),
        BandedOp("2N+(a+1)", ((0, lambda n: 2.0 * n + alpha + 1.0),)),
        name="Y",
    )


def y_operator_check(alpha: float, c: CoeffVec, rule: QuadRule) -> float:
    """L2 distance between the algebraic Y c and pointwise y * f, by quadrature."""
    c.require(Basis.laguerre(alpha))
    rule.require_laguerre(alpha)
    # One extra slot so the raising band of Y is not truncated
    padded = c.with_values(np.append(c.values, 0.0))
    algebraic = evaluate(y_multiplication(alpha)(padded), rule.nodes)
    pointwise = rule.nodes * evaluate(c, rule.nodes)
    diff = algebraic - pointwise
    return float(np.sqrt(np.sum(rule.weights * np.abs(diff) ** 2)))


def adjoint_defect(op: BandedOp, adjoint: BandedOp, c: Sequence[complex], d: Sequence[complex]) -> float:
    """|<op c, d> - <c, adjoint d>| in the coefficient inner product."""
    c = np.asarray(c, dtype=complex)
    d = np.asarray(d, dtype=complex)
    return float(abs(np.vdot(op.apply(c), d) - np.vdot(c, adjoint.apply(d))))
