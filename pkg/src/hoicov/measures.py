"""Whole-system and single-variable information measures for Gaussian data.

All values are in nats. For real-valued data every measure carries a global
factor 1/2 relative to the complex-valued case; the factor is applied here
and nowhere else.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSystemWarning, DimensionMismatch, IndexOverlap
from .linalg import (
    FieldKind,
    HermitianMatrix,
    delete_index,
    invert,
    kind_factor,
    log_det,
    schur_complement,
    standardize,
    submatrix,
)

LN_PI = math.log(math.pi)


@dataclass(frozen=True)
class MeasureReport:
    """TC, DTC and their exact difference/sum for one matrix."""

    tc: float
    dtc: float
    oinfo: float
    tse: float
    kind: FieldKind
    p: int

    def __post_init__(self):
        if self.oinfo != self.tc - self.dtc or self.tse != self.tc + self.dtc:
            raise ValueError("oinfo/tse must be the exact difference/sum of tc, dtc")
        if self.tc < -1e-9 or self.dtc < -1e-9:
            raise ValueError(f"negative tc={self.tc} or dtc={self.dtc}")


@dataclass(frozen=True)
class EntropyValue:
    value: float
    kind: FieldKind


def _warn_p2(p: int):
    if p == 2:
        warnings.warn(
            "p=2 system: O-information is identically zero",
            DegenerateSystemWarning,
            stacklevel=3,
        )


def total_correlation(s: HermitianMatrix, *, ridge: float | None = None) -> float:
    """-ln det of the correlation/coherence matrix (times the kind factor)."""
    if s.p < 2:
        raise DimensionMismatch(f"total correlation needs p >= 2, got p={s.p}")
    return kind_factor(s.kind) * -log_det(standardize(s), ridge=ridge)


def dual_total_correlation(s: HermitianMatrix, *,
                           ridge: float | None = None) -> float:
    """-ln det of the partial correlation/coherence matrix.

    The partial matrix is the standardized precision matrix (the scaled
    concentration matrix), so this quantifies deviation from total partial
    independence.
    """
    if s.p < 2:
        raise DimensionMismatch(f"dual total correlation needs p >= 2, got p={s.p}")
    prec = invert(s, ridge=ridge)
    return kind_factor(s.kind) * -log_det(standardize(prec), ridge=ridge)


def o_information(s: HermitianMatrix, *, ridge: float | None = None) -> float:
    """TC - DTC; positive means redundancy-dominated, negative synergy-dominated."""
    _warn_p2(s.p)
    return total_correlation(s, ridge=ridge) - dual_total_correlation(s, ridge=ridge)


def tse_complexity(s: HermitianMatrix, *, ridge: float | None = None) -> float:
    """TC + DTC, the integration/segregation balance approximation."""
    _warn_p2(s.p)
    return total_correlation(s, ridge=ridge) + dual_total_correlation(s, ridge=ridge)


def measure_report(s: HermitianMatrix, *, ridge: float | None = None) -> MeasureReport:
    _warn_p2(s.p)
    tc = total_correlation(s, ridge=ridge)
    dtc = dual_total_correlation(s, ridge=ridge)
    return MeasureReport(tc=tc, dtc=dtc, oinfo=tc - dtc, tse=tc + dtc,
                         kind=s.kind, p=s.p)


def rsi(s: HermitianMatrix, x, y: int, *, ridge: float | None = None) -> float:
    """Redundancy-synergy index of the variables `x` with respect to scalar `y`.

    TC(X) - TC(X|y): negative means the variables in x jointly carry more
    information about y than separately (synergy); positive means redundancy.
    """
    x = tuple(int(i) for i in x)
    y = int(y)
    if y in x:
        raise IndexOverlap(f"y={y} must not be a member of x={x}")
    if len(x) < 2:
        raise DimensionMismatch(f"rsi needs at least two x variables, got {len(x)}")
    r_xx = standardize(submatrix(s, x))
    r_cond = standardize(schur_complement(s, x, (y,), ridge=ridge))
    return kind_factor(s.kind) * (
        -log_det(r_xx, ridge=ridge) + log_det(r_cond, ridge=ridge)
    )


def lambda_rsi(s: HermitianMatrix, i: int, *, ridge: float | None = None) -> float:
    """RSI localizer: rsi of all remaining variables with respect to node i."""
    if s.p < 3:
        raise DimensionMismatch(f"lambda rsi needs p >= 3, got p={s.p}")
    rest = tuple(j for j in range(s.p) if j != i)
    return rsi(s, rest, i, ridge=ridge)


def _o_information_quiet(s: HermitianMatrix, *, ridge: float | None = None) -> float:
    return total_correlation(s, ridge=ridge) - dual_total_correlation(s, ridge=ridge)


def oinfo_gradient(s: HermitianMatrix, i: int, *,
                   ridge: float | None = None) -> float:
    """First-order O-information gradient for node i.

    Compares the whole system to a copy with node i marginalized out
    (deleted, never conditioned out).
    """
    if s.p < 3:
        raise DimensionMismatch(f"gradient needs p >= 3, got p={s.p}")
    return _o_information_quiet(s, ridge=ridge) - _o_information_quiet(
        delete_index(s, i), ridge=ridge
    )


def tc_trace_approx(s: HermitianMatrix) -> float:
    """Quadratic trace statistic 1/2 tr[(I - R)^2] approximating TC.

    Valid only for coherence-type (unit-diagonal standardized) matrices,
    which is enforced by standardizing internally; it does not approximate
    the log-determinant of arbitrary PD matrices.
    """
    r = standardize(s).values
    m = np.eye(s.p) - r
    return kind_factor(s.kind) * 0.5 * float(np.trace(m @ m).real)


def dtc_trace_approx(s: HermitianMatrix, *, ridge: float | None = None) -> float:
    """Quadratic trace statistic 1/2 tr[(I - P)^2] approximating DTC."""
    p_mat = standardize(invert(s, ridge=ridge)).values
    m = np.eye(s.p) - p_mat
    return kind_factor(s.kind) * 0.5 * float(np.trace(m @ m).real)


def gaussian_entropy(s: HermitianMatrix, *, ridge: float | None = None) -> EntropyValue:
    """Differential entropy of a zero-mean Gaussian with covariance s.

    Complex case: p + p ln(pi) + ln det S; real case takes half of the same
    expression. Constants cancel in every measure built from entropy
    differences, so only this value carries them.
    """
    ld = log_det(s, ridge=ridge)
    value = s.p + s.p * LN_PI + ld
    return EntropyValue(kind_factor(s.kind) * value, s.kind)
