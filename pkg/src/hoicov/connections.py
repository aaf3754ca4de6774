"""Contribution of connections to system measures.

pi measures quantify what the connections between one node and the rest add
to TC/DTC/O-information/TSE; kappa measures do the same for the connections
between one group and all other groups. Each is "intact minus disconnected",
where the disconnected system keeps both conditional variances but zeroes
the cross-block.

Two routes are implemented for every quantity: the explicit closed form
(public result) and the definitional route that builds the disconnected
matrix and re-runs the plain measure (used as an internal oracle).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, PartitionMismatch
from .linalg import (
    FieldKind,
    HermitianMatrix,
    delete_group,
    delete_index,
    diag_part,
    invert,
    kind_factor,
    log_det,
    schur_complement,
)
from .measures import dual_total_correlation, total_correlation
from .partition import Partition
from .structured import sigma_dtc, sigma_tc


@dataclass(frozen=True)
class ConnectionReport:
    """Contribution of one node's or group's connections to each measure."""

    target: int
    tc: float
    dtc: float
    oinfo: float
    tse: float
    kind: FieldKind

    def __post_init__(self):
        if self.oinfo != self.tc - self.dtc or self.tse != self.tc + self.dtc:
            raise ValueError("oinfo/tse must be the exact difference/sum of tc, dtc")
        if self.tc < -1e-9 or self.dtc < -1e-9:
            raise ValueError(f"negative tc={self.tc} or dtc={self.dtc}")


def _rest(p: int, i: int) -> tuple[int, ...]:
    if p < 3:
        raise DimensionMismatch(f"connection contributions need p >= 3, got p={p}")
    return tuple(j for j in range(p) if j != i)


def _check_group(part: Partition, k: int):
    part.group(k)
    if part.K < 2:
        raise PartitionMismatch("group contributions need at least two groups")


def _embed_blocks(p: int, kind: FieldKind, placements) -> HermitianMatrix:
    """Assemble a p x p matrix from (indices, block) pairs, zero off-blocks."""
    out = np.zeros((p, p), dtype=np.complex128)
    for idx, block in placements:
        out[np.ix_(idx, idx)] = block.values
    return HermitianMatrix(out, kind)


# -- nodal (pi) measures -----------------------------------------------------

def disconnected_covariance(s: HermitianMatrix, i: int, *,
                            ridge: float | None = None) -> HermitianMatrix:
    """Covariance of the system with node i cut from the rest.

    Block-diagonal with var(x_i | rest) and var(rest | x_i); exact zeros
    off-block, entries kept at their original positions.
    """
    rest = _rest(s.p, i)
    v_i = schur_complement(s, (i,), rest, ridge=ridge)
    v_rest = schur_complement(s, rest, (i,), ridge=ridge)
    return _embed_blocks(s.p, s.kind, [((i,), v_i), (rest, v_rest)])


def disconnected_concentration(s: HermitianMatrix, i: int, *,
                               ridge: float | None = None) -> HermitianMatrix:
    """Concentration of the disconnected system, built from the precision matrix."""
    rest = _rest(s.p, i)
    c = invert(s, ridge=ridge)
    c_i = schur_complement(c, (i,), rest, ridge=ridge)
    c_rest = schur_complement(c, rest, (i,), ridge=ridge)
    return _embed_blocks(s.p, s.kind, [((i,), c_i), (rest, c_rest)])


def pi_tc(s: HermitianMatrix, i: int, *, ridge: float | None = None) -> float:
    """Contribution of node i's connections to the total coherence (>= 0)."""
    rest = _rest(s.p, i)
    v = schur_complement(s, rest, (i,), ridge=ridge)
    whole = log_det(diag_part(s), ridge=ridge) - log_det(s, ridge=ridge)
    cut = log_det(diag_part(v), ridge=ridge) - log_det(v, ridge=ridge)
    return kind_factor(s.kind) * (whole - cut)


def pi_dtc(s: HermitianMatrix, i: int, *, ridge: float | None = None) -> float:
    """Contribution of node i's connections to the dual total coherence (>= 0)."""
    _rest(s.p, i)
    c = invert(s, ridge=ridge)
    c_rest = invert(delete_index(s, i), ridge=ridge)
    whole = log_det(diag_part(c), ridge=ridge) - log_det(c, ridge=ridge)
    cut = log_det(diag_part(c_rest), ridge=ridge) - log_det(c_rest, ridge=ridge)
    return kind_factor(s.kind) * (whole - cut)


def pi_oinfo(s: HermitianMatrix, i: int, *, ridge: float | None = None) -> float:
    return pi_tc(s, i, ridge=ridge) - pi_dtc(s, i, ridge=ridge)


def pi_tse(s: HermitianMatrix, i: int, *, ridge: float | None = None) -> float:
    return pi_tc(s, i, ridge=ridge) + pi_dtc(s, i, ridge=ridge)


def pi_report(s: HermitianMatrix, i: int, *,
              ridge: float | None = None) -> ConnectionReport:
    tc = pi_tc(s, i, ridge=ridge)
    dtc = pi_dtc(s, i, ridge=ridge)
    return ConnectionReport(target=i, tc=tc, dtc=dtc, oinfo=tc - dtc,
                            tse=tc + dtc, kind=s.kind)


def pi_tc_definitional(s: HermitianMatrix, i: int, *,
                       ridge: float | None = None) -> float:
    """Intact-minus-disconnected route for pi TC (verification oracle)."""
    disc = disconnected_covariance(s, i, ridge=ridge)
    return total_correlation(s, ridge=ridge) - total_correlation(disc, ridge=ridge)


def pi_dtc_definitional(s: HermitianMatrix, i: int, *,
                        ridge: float | None = None) -> float:
    """Intact-minus-disconnected route for pi DTC (verification oracle)."""
    disc = invert(disconnected_concentration(s, i, ridge=ridge), ridge=ridge)
    return dual_total_correlation(s, ridge=ridge) - dual_total_correlation(
        disc, ridge=ridge
    )


# -- group (kappa) measures --------------------------------------------------

def group_disconnected_covariance(s: HermitianMatrix, part: Partition, k: int, *,
                                  ridge: float | None = None) -> HermitianMatrix:
    """Covariance with group k cut from all other groups."""
    _check_group(part, k)
    gk = part.group(k)
    _, remaining = part.drop_group(k)
    v_k = schur_complement(s, gk, remaining, ridge=ridge)
    v_rest = schur_complement(s, remaining, gk, ridge=ridge)
    return _embed_blocks(s.p, s.kind, [(gk, v_k), (remaining, v_rest)])


def group_disconnected_concentration(s: HermitianMatrix, part: Partition, k: int, *,
                                     ridge: float | None = None) -> HermitianMatrix:
    """Concentration of the group-disconnected system, from the precision matrix."""
    _check_group(part, k)
    gk = part.group(k)
    _, remaining = part.drop_group(k)
    c = invert(s, ridge=ridge)
    c_k = schur_complement(c, gk, remaining, ridge=ridge)
    c_rest = schur_complement(c, remaining, gk, ridge=ridge)
    return _embed_blocks(s.p, s.kind, [(gk, c_k), (remaining, c_rest)])


def kappa_tc(s: HermitianMatrix, part: Partition, k: int, *,
             ridge: float | None = None) -> float:
    """Contribution of group k's between-group connections to sigma TC (>= 0)."""
    _check_group(part, k)
    sub_part, remaining = part.drop_group(k)
    v_rest = schur_complement(s, remaining, part.group(k), ridge=ridge)
    return sigma_tc(s, part, ridge=ridge) - sigma_tc(v_rest, sub_part, ridge=ridge)


def kappa_dtc(s: HermitianMatrix, part: Partition, k: int, *,
              ridge: float | None = None) -> float:
    """Contribution of group k's between-group connections to sigma DTC (>= 0)."""
    _check_group(part, k)
    sub_part, _ = part.drop_group(k)
    s_rest = delete_group(s, part, k)
    return sigma_dtc(s, part, ridge=ridge) - sigma_dtc(s_rest, sub_part, ridge=ridge)


def kappa_oinfo(s: HermitianMatrix, part: Partition, k: int, *,
                ridge: float | None = None) -> float:
    return kappa_tc(s, part, k, ridge=ridge) - kappa_dtc(s, part, k, ridge=ridge)


def kappa_tse(s: HermitianMatrix, part: Partition, k: int, *,
              ridge: float | None = None) -> float:
    return kappa_tc(s, part, k, ridge=ridge) + kappa_dtc(s, part, k, ridge=ridge)


def kappa_report(s: HermitianMatrix, part: Partition, k: int, *,
                 ridge: float | None = None) -> ConnectionReport:
    tc = kappa_tc(s, part, k, ridge=ridge)
    dtc = kappa_dtc(s, part, k, ridge=ridge)
    return ConnectionReport(target=k, tc=tc, dtc=dtc, oinfo=tc - dtc,
                            tse=tc + dtc, kind=s.kind)


def kappa_tc_definitional(s: HermitianMatrix, part: Partition, k: int, *,
                          ridge: float | None = None) -> float:
    """Intact-minus-disconnected route for kappa TC (verification oracle)."""
    disc = group_disconnected_covariance(s, part, k, ridge=ridge)
    return sigma_tc(s, part, ridge=ridge) - sigma_tc(disc, part, ridge=ridge)


def kappa_dtc_definitional(s: HermitianMatrix, part: Partition, k: int, *,
                           ridge: float | None = None) -> float:
    """Intact-minus-disconnected route for kappa DTC (verification oracle)."""
    disc = invert(group_disconnected_concentration(s, part, k, ridge=ridge),
                  ridge=ridge)
    return sigma_dtc(s, part, ridge=ridge) - sigma_dtc(disc, part, ridge=ridge)
