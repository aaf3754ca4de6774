"""Higher-order information measures for covariance and cross-spectral matrices.

Computes total correlation/coherence, dual total correlation (total partial
coherence), O-information, TSE complexity, redundancy-synergy indices, their
between-group structured variants, and per-node/per-group connection
contributions, for real symmetric and complex Hermitian positive-definite
matrices, together with an AR simulation and periodogram pipeline for
frequency-resolved analysis.
"""

from .ar import (
    ARModel,
    Sinusoid,
    StabilityResult,
    TimeSeriesEpochs,
    ar_is_stable,
    companion_matrix,
    sample_multivariate_t,
    simulate_ar,
)
from .connections import (
    ConnectionReport,
    disconnected_concentration,
    disconnected_covariance,
    group_disconnected_concentration,
    group_disconnected_covariance,
    kappa_dtc,
    kappa_oinfo,
    kappa_report,
    kappa_tc,
    kappa_tse,
    pi_dtc,
    pi_oinfo,
    pi_report,
    pi_tc,
    pi_tse,
)
from .errors import (
    ConvergenceFailure,
    DegenerateSystemWarning,
    DimensionMismatch,
    EpochMismatch,
    HoicovError,
    IndexOutOfRange,
    IndexOverlap,
    InvalidDof,
    KindMismatch,
    MalformedFile,
    NonPositiveDiagonal,
    NotHermitian,
    NotPositiveDefinite,
    PartitionMismatch,
    UnstableModel,
)
from .linalg import (
    CholeskyFactor,
    FieldKind,
    HermitianMatrix,
    blockdiag_part,
    cholesky,
    delete_group,
    delete_index,
    diag_part,
    invert,
    kind_factor,
    log_det,
    schur_complement,
    standardize,
    submatrix,
)
from .measures import (
    EntropyValue,
    MeasureReport,
    dtc_trace_approx,
    dual_total_correlation,
    gaussian_entropy,
    lambda_rsi,
    measure_report,
    o_information,
    oinfo_gradient,
    rsi,
    tc_trace_approx,
    total_correlation,
    tse_complexity,
)
from .oracles import run_verification
from .partition import Partition
from .spectra import (
    CrossSpectra,
    SweepConfig,
    SweepTable,
    hann_taper,
    parametric_cross_spectra,
    periodogram_cross_spectra,
    spectral_measure_sweep,
)
from .structured import (
    StructuredReport,
    sigma_dtc,
    sigma_oinfo,
    sigma_rsi,
    sigma_tc,
    sigma_tse,
    structured_report,
)

__version__ = "0.1.0"
