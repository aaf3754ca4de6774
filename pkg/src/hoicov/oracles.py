"""Brute-force oracles validating every closed form, plus the verify runner.

Each oracle recomputes a measure from first principles (entropy sums,
conditional variances, the full equal-df Wishart KL expression, or rebuilt
disconnected systems) through a code path independent of the production
formula. The verify runner sweeps oracle/primary pairs over a seeded random
PD corpus and reports the worst absolute discrepancy per pair.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import solve_triangular

from . import connections
from .linalg import (
    FieldKind,
    HermitianMatrix,
    cholesky,
    diag_part,
    blockdiag_part,
    invert,
    kind_factor,
    log_det,
    schur_complement,
    submatrix,
)
from .measures import (
    dual_total_correlation,
    gaussian_entropy,
    total_correlation,
)
from .partition import Partition
from .structured import sigma_tc

ORACLE_TOL = 1e-8
TRACE_CANCELLATION_TOL = 1e-10
DISCONNECTION_TOL = 1e-9
CONDITIONAL_PATH_TOL = 1e-10


def tc_entropy_oracle(s: HermitianMatrix) -> float:
    """Total correlation from its entropy definition: sum H(x_i) - H(X)."""
    marginals = sum(
        gaussian_entropy(submatrix(s, (i,))).value for i in range(s.p)
    )
    return marginals - gaussian_entropy(s).value


def dtc_conditional_oracle(s: HermitianMatrix) -> tuple[float, float]:
    """Dual total correlation as H(X) - sum H(x_i | rest), two ways.

    The conditional variance var(x_i | rest) is computed (a) as the
    reciprocal of the i-th diagonal entry of the precision matrix and (b) as
    the Schur complement of {i} given the rest; both values are returned.
    """
    factor = kind_factor(s.kind)
    h_joint = gaussian_entropy(s).value
    prec_diag = invert(s).values.diagonal().real

    def conditional_entropy(variance: float) -> float:
        one = HermitianMatrix(np.array([[variance]]), s.kind)
        return gaussian_entropy(one).value

    via_precision = h_joint - sum(
        conditional_entropy(1.0 / prec_diag[i]) for i in range(s.p)
    )

    def rest(i: int) -> tuple[int, ...]:
        return tuple(j for j in range(s.p) if j != i)

    via_schur = h_joint - sum(
        conditional_entropy(
            schur_complement(s, (i,), rest(i)).values[0, 0].real
        )
        for i in range(s.p)
    )
    return via_precision, via_schur


def wishart_kl_oracle(s: HermitianMatrix,
                      part: Partition | None = None) -> float:
    """Full equal-df Wishart KL divergence against the (block-)diagonal reference.

    KL = factor * [tr(Ref^{-1} S) - p + ln det Ref - ln det S]. The trace term
    collapses to p for both reference choices, which is what reduces the
    divergence to a log-determinant difference.
    """
    ref = diag_part(s) if part is None else blockdiag_part(s, part)
    trace = wishart_trace_term(s, part)
    return kind_factor(s.kind) * (trace - s.p + log_det(ref) - log_det(s))


def wishart_trace_term(s: HermitianMatrix,
                       part: Partition | None = None) -> float:
    """tr(Ref^{-1} S) for the diagonal or block-diagonal reference."""
    ref = diag_part(s) if part is None else blockdiag_part(s, part)
    low = cholesky(ref).matrix
    y = solve_triangular(low, s.values, lower=True)
    x = solve_triangular(low.conj().T, y, lower=False)
    return float(np.trace(x).real)


def dtc_as_tc_of_precision(s: HermitianMatrix) -> float:
    """Dual total correlation computed as the total correlation of S^{-1}."""
    return total_correlation(invert(s))


def random_pd_matrix(p: int, kind: FieldKind,
                     rng: np.random.Generator) -> HermitianMatrix:
    """Random PD matrix G G* + 0.1 I with standard normal G."""
    g = rng.standard_normal((p, p))
    if kind is FieldKind.COMPLEX:
        g = g + 1j * rng.standard_normal((p, p))
    v = g @ g.conj().T + 0.1 * np.eye(p)
    return HermitianMatrix(v, kind)


def random_partition(p: int, rng: np.random.Generator,
                     min_groups: int = 1) -> Partition:
    idx = list(rng.permutation(p))
    k = int(rng.integers(min_groups, p + 1))
    cuts = sorted(rng.choice(np.arange(1, p), size=k - 1, replace=False)) if k > 1 else []
    groups, start = [], 0
    for c in list(cuts) + [p]:
        groups.append(tuple(int(i) for i in idx[start:c]))
        start = c
    return Partition(tuple(groups), p)


def standard_corpus(n: int, seed: int, p_range: tuple[int, int] = (2, 10)):
    """Seeded corpus of random PD matrices, alternating real and complex."""
    rng = np.random.Generator(np.random.PCG64(seed))
    corpus = []
    for j in range(n):
        p = int(rng.integers(p_range[0], p_range[1] + 1))
        kind = FieldKind.REAL if j % 2 == 0 else FieldKind.COMPLEX
        corpus.append((f"case_{j}_p{p}_{kind.value}", random_pd_matrix(p, kind, rng)))
    return corpus


@dataclass(frozen=True)
class OracleDiscrepancy:
    case_id: str
    primary: float
    oracle: float

    @property
    def abs_diff(self) -> float:
        return abs(self.primary - self.oracle)


@dataclass
class OracleCheck:
    name: str
    tolerance: float
    worst: OracleDiscrepancy | None = None
    n_cases: int = 0

    def record(self, case_id: str, primary: float, oracle: float):
        d = OracleDiscrepancy(case_id, primary, oracle)
        self.n_cases += 1
        if self.worst is None or d.abs_diff > self.worst.abs_diff:
            self.worst = d

    @property
    def max_abs_diff(self) -> float:
        return self.worst.abs_diff if self.worst else 0.0

    @property
    def passed(self) -> bool:
        return self.max_abs_diff <= self.tolerance


@dataclass
class VerificationReport:
    corpus_size: int
    seed: int
    checks: list[OracleCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "corpus_size": self.corpus_size,
            "seed": self.seed,
            "pass": self.passed,
            "checks": {
                c.name: {
                    "max_abs_diff": c.max_abs_diff,
                    "tolerance": c.tolerance,
                    "n_cases": c.n_cases,
                    "worst_case": c.worst.case_id if c.worst else None,
                    "pass": c.passed,
                }
                for c in self.checks
            },
        }


def run_verification(corpus_size: int = 400, seed: int = 0) -> VerificationReport:
    """Sweep every oracle/primary pair over the standard random corpus."""
    if corpus_size < 1:
        raise ValueError(f"corpus size must be >= 1, got {corpus_size}")
    rng = np.random.Generator(np.random.PCG64(seed + 1))
    report = VerificationReport(corpus_size=corpus_size, seed=seed)
    tc_vs_entropy = OracleCheck("tc_vs_entropy_definition", ORACLE_TOL)
    dtc_vs_conditional = OracleCheck("dtc_vs_conditional_entropy", ORACLE_TOL)
    conditional_paths = OracleCheck("conditional_variance_paths", CONDITIONAL_PATH_TOL)
    kl_diag = OracleCheck("tc_vs_wishart_kl_diag", ORACLE_TOL)
    kl_block = OracleCheck("sigma_tc_vs_wishart_kl_blockdiag", ORACLE_TOL)
    trace_diag = OracleCheck("wishart_trace_cancellation", TRACE_CANCELLATION_TOL)
    dtc_precision = OracleCheck("dtc_vs_tc_of_precision", ORACLE_TOL)
    pi_tc_pair = OracleCheck("pi_tc_definitional_vs_explicit", DISCONNECTION_TOL)
    pi_dtc_pair = OracleCheck("pi_dtc_definitional_vs_explicit", DISCONNECTION_TOL)
    kappa_tc_pair = OracleCheck("kappa_tc_definitional_vs_explicit", DISCONNECTION_TOL)
    kappa_dtc_pair = OracleCheck("kappa_dtc_definitional_vs_explicit", DISCONNECTION_TOL)

    for case_id, s in standard_corpus(corpus_size, seed):
        tc = total_correlation(s)
        dtc = dual_total_correlation(s)
        tc_vs_entropy.record(case_id, tc, tc_entropy_oracle(s))
        via_precision, via_schur = dtc_conditional_oracle(s)
        dtc_vs_conditional.record(case_id, dtc, via_schur)
        conditional_paths.record(case_id, via_precision, via_schur)
        kl_diag.record(case_id, tc, wishart_kl_oracle(s))
        trace_diag.record(case_id, wishart_trace_term(s), float(s.p))
        dtc_precision.record(case_id, dtc, dtc_as_tc_of_precision(s))
        part = random_partition(s.p, rng)
        kl_block.record(case_id, sigma_tc(s, part), wishart_kl_oracle(s, part))
        if s.p >= 3:
            i = int(rng.integers(s.p))
            pi_tc_pair.record(case_id, connections.pi_tc(s, i),
                              connections.pi_tc_definitional(s, i))
            pi_dtc_pair.record(case_id, connections.pi_dtc(s, i),
                               connections.pi_dtc_definitional(s, i))
            part2 = random_partition(s.p, rng, min_groups=2)
            k = int(rng.integers(part2.K))
            kappa_tc_pair.record(case_id, connections.kappa_tc(s, part2, k),
                                 connections.kappa_tc_definitional(s, part2, k))
            kappa_dtc_pair.record(case_id, connections.kappa_dtc(s, part2, k),
                                  connections.kappa_dtc_definitional(s, part2, k))

    report.checks = [
        tc_vs_entropy, dtc_vs_conditional, conditional_paths, kl_diag, kl_block,
        trace_diag, dtc_precision, pi_tc_pair, pi_dtc_pair, kappa_tc_pair,
        kappa_dtc_pair,
    ]
    return report
