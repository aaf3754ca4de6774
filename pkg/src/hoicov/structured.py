"""Between-group measures over a partition: sigma TC/DTC/O-information/TSE/RSI.

These quantify interactions between groups while being invariant to any
invertible transform applied within a single group, so they report the
between-group redundancy/synergy balance regardless of within-group
structure. With singleton groups every sigma measure reduces to its
unstructured counterpart.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import DegenerateSystemWarning
from .linalg import (
    FieldKind,
    HermitianMatrix,
    blockdiag_part,
    delete_group,
    invert,
    kind_factor,
    log_det,
    schur_complement,
)
from .partition import Partition


@dataclass(frozen=True)
class StructuredReport:
    sigma_tc: float
    sigma_dtc: float
    sigma_oinfo: float
    sigma_tse: float
    group_count: int
    kind: FieldKind

    def __post_init__(self):
        if (self.sigma_oinfo != self.sigma_tc - self.sigma_dtc
                or self.sigma_tse != self.sigma_tc + self.sigma_dtc):
            raise ValueError("sigma oinfo/tse must be the exact difference/sum")
        if self.sigma_tc < -1e-9 or self.sigma_dtc < -1e-9:
            raise ValueError(
                f"negative sigma_tc={self.sigma_tc} or sigma_dtc={self.sigma_dtc}"
            )


def _warn_k2(k: int):
    if k == 2:
        warnings.warn(
            "K=2 partition: structured O-information is identically zero",
            DegenerateSystemWarning,
            stacklevel=3,
        )


def sigma_tc(s: HermitianMatrix, part: Partition, *,
             ridge: float | None = None) -> float:
    """Between-group total coherence: ln det blockdiag(S) - ln det S.

    Likelihood-ratio statistic for independence between the groups (times the
    kind factor); zero iff S is block-diagonal with respect to the partition.
    """
    return kind_factor(s.kind) * (
        log_det(blockdiag_part(s, part), ridge=ridge) - log_det(s, ridge=ridge)
    )


def sigma_dtc(s: HermitianMatrix, part: Partition, *,
              ridge: float | None = None) -> float:
    """Between-group partial coherence: same statistic on the precision matrix."""
    c = invert(s, ridge=ridge)
    return kind_factor(s.kind) * (
        log_det(blockdiag_part(c, part), ridge=ridge) - log_det(c, ridge=ridge)
    )


def sigma_oinfo(s: HermitianMatrix, part: Partition, *,
                ridge: float | None = None) -> float:
    """sigma TC - sigma DTC: sign gives the between-group redundancy/synergy balance."""
    _warn_k2(part.K)
    return sigma_tc(s, part, ridge=ridge) - sigma_dtc(s, part, ridge=ridge)


def sigma_tse(s: HermitianMatrix, part: Partition, *,
              ridge: float | None = None) -> float:
    _warn_k2(part.K)
    return sigma_tc(s, part, ridge=ridge) + sigma_dtc(s, part, ridge=ridge)


def structured_report(s: HermitianMatrix, part: Partition, *,
                      ridge: float | None = None) -> StructuredReport:
    _warn_k2(part.K)
    stc = sigma_tc(s, part, ridge=ridge)
    sdtc = sigma_dtc(s, part, ridge=ridge)
    return StructuredReport(sigma_tc=stc, sigma_dtc=sdtc, sigma_oinfo=stc - sdtc,
                            sigma_tse=stc + sdtc, group_count=part.K, kind=s.kind)


def sigma_rsi(s: HermitianMatrix, part: Partition, k: int, *,
              ridge: float | None = None) -> float:
    """Group localizer: sigma TC of the other groups minus the same conditioned
    on group k.

    Negative means group k contributes synergy to the between-group network,
    positive redundancy, independent of within-group interactions. With
    singleton groups this reduces to the per-node RSI localizer.
    """
    sub_part, remaining = part.drop_group(k)
    s_rest = delete_group(s, part, k)
    s_cond = schur_complement(s, remaining, part.group(k), ridge=ridge)
    return sigma_tc(s_rest, sub_part, ridge=ridge) - sigma_tc(
        s_cond, sub_part, ridge=ridge
    )
