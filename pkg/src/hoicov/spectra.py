"""Cross-spectral estimation and per-frequency measure sweeps.

Cross-spectra are Hermitian matrices indexed by frequency, estimated either
non-parametrically (Hann-tapered periodogram averaged over epochs) or
parametrically from AR coefficients. Every measure in the package applies
per frequency with kind=COMPLEX.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import connections, measures, structured
from .ar import ARModel, TimeSeriesEpochs, ar_is_stable
from .errors import DimensionMismatch, NotPositiveDefinite, PartitionMismatch, UnstableModel
from .linalg import FieldKind, HermitianMatrix
from .parallel import ordered_map
from .partition import Partition


@dataclass(frozen=True)
class CrossSpectra:
    """Frequency-indexed Hermitian matrices with sampling metadata."""

    frequencies: np.ndarray
    matrices: tuple[HermitianMatrix, ...]
    epochs_averaged: int
    sampling_rate: float

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        if f.ndim != 1 or len(f) != len(self.matrices):
            raise DimensionMismatch("one matrix per frequency required")
        if len(f) > 1 and not np.all(np.diff(f) > 0):
            raise DimensionMismatch("frequencies must be strictly ascending")
        f.setflags(write=False)
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "matrices", tuple(self.matrices))

    @property
    def p(self) -> int:
        return self.matrices[0].p


def hann_taper(n_samples: int) -> np.ndarray:
    """Periodic Hann window w_t = (1 - cos(2 pi t / T)) / 2."""
    if n_samples < 2:
        raise DimensionMismatch(f"taper needs at least 2 samples, got {n_samples}")
    t = np.arange(n_samples, dtype=float)
    return 0.5 * (1.0 - np.cos(2.0 * math.pi * t / n_samples))


def periodogram_cross_spectra(ts: TimeSeriesEpochs) -> CrossSpectra:
    """Epoch-averaged tapered periodogram on bins 1..T/2 (DC excluded).

    Normalized by epoch count and taper power; the normalization cancels in
    every standardization-based measure and is fixed only for
    reproducibility.
    """
    n = ts.samples_per_epoch
    if n % 2 != 0:
        raise DimensionMismatch(f"samples per epoch must be even, got {n}")
    w = hann_taper(n)
    spectra = np.fft.fft(ts.data * w[None, :, None], axis=1)  # (E, T, p)
    bins = np.arange(1, n // 2 + 1)
    x = spectra[:, bins, :]
    norm = 1.0 / (ts.epochs * float(np.sum(w * w)))
    cross = np.einsum("ebi,ebj->bij", x, x.conj()) * norm
    freqs = bins * ts.sampling_rate / n
    mats = tuple(HermitianMatrix(cross[b], FieldKind.COMPLEX)
                 for b in range(len(bins)))
    return CrossSpectra(freqs, mats, ts.epochs, ts.sampling_rate)


def parametric_cross_spectra(model: ARModel, frequencies) -> CrossSpectra:
    """Population cross-spectra from the AR transfer function.

    S(f) = A(f)^{-1} Sigma A(f)^{-*} with A(f) = I - sum_k A(k) e^{-i 2 pi f k / fs}.
    Sinusoidal drives are deterministic and not part of the stochastic
    spectrum, so they are ignored here.
    """
    result = ar_is_stable(model)
    if not result.stable:
        raise UnstableModel(result.spectral_radius)
    freqs = np.asarray(frequencies, dtype=float)
    eye = np.eye(model.p, dtype=np.complex128)
    sigma = model.innovation_cov.astype(np.complex128)
    mats = []
    for f in freqs:
        a = eye.copy()
        for k, coeff in enumerate(model.coeffs, start=1):
            a -= coeff * np.exp(-2j * math.pi * f * k / model.sampling_rate)
        h = np.linalg.inv(a)
        s = h @ sigma @ h.conj().T
        mats.append(HermitianMatrix((s + s.conj().T) / 2.0, FieldKind.COMPLEX))
    return CrossSpectra(freqs, tuple(mats), 0, model.sampling_rate)


@dataclass(frozen=True)
class SweepConfig:
    """Which measures to evaluate at each frequency."""

    global_measures: bool = True
    nodal_lambda_rsi: bool = False
    nodal_oinfo_gradient: bool = False
    nodal_pi: bool = False
    partition: Partition | None = None
    structured: bool = False
    group_kappa: bool = False
    group_sigma_rsi: bool = False
    ridge: float | None = None

    def __post_init__(self):
        needs_partition = self.structured or self.group_kappa or self.group_sigma_rsi
        if needs_partition and self.partition is None:
            raise PartitionMismatch("structured/group measures require a partition")


@dataclass
class SweepTable:
    """Per-frequency measure values; gap rows hold NaN and log a warning."""

    frequencies: np.ndarray
    columns: dict[str, np.ndarray]
    warnings: list[str] = field(default_factory=list)

    @property
    def column_names(self) -> list[str]:
        return list(self.columns)

    def band_values(self, name: str, lo: float, hi: float) -> np.ndarray:
        mask = (self.frequencies >= lo) & (self.frequencies <= hi)
        return self.columns[name][mask]

    def value_at(self, name: str, freq: float) -> float:
        b = int(np.argmin(np.abs(self.frequencies - freq)))
        return float(self.columns[name][b])


def sweep_column_names(p: int, config: SweepConfig) -> list[str]:
    names: list[str] = []
    if config.global_measures:
        names += ["tc", "dtc", "oinfo", "tse"]
    if config.nodal_lambda_rsi:
        names += [f"lambda_rsi_{i}" for i in range(p)]
    if config.nodal_oinfo_gradient:
        names += [f"oinfo_gradient_{i}" for i in range(p)]
    if config.nodal_pi:
        for i in range(p):
            names += [f"pi_tc_{i}", f"pi_dtc_{i}", f"pi_oinfo_{i}", f"pi_tse_{i}"]
    if config.structured:
        names += ["sigma_tc", "sigma_dtc", "sigma_oinfo", "sigma_tse"]
    if config.group_kappa:
        for k in range(config.partition.K):
            names += [f"kappa_tc_g{k}", f"kappa_dtc_g{k}",
                      f"kappa_oinfo_g{k}", f"kappa_tse_g{k}"]
    if config.group_sigma_rsi:
        names += [f"sigma_rsi_g{k}" for k in range(config.partition.K)]
    return names


def _sweep_row(s: HermitianMatrix, config: SweepConfig) -> list[float]:
    ridge = config.ridge
    row: list[float] = []
    if config.global_measures:
        rep = measures.measure_report(s, ridge=ridge)
        row += [rep.tc, rep.dtc, rep.oinfo, rep.tse]
    if config.nodal_lambda_rsi:
        row += [measures.lambda_rsi(s, i, ridge=ridge) for i in range(s.p)]
    if config.nodal_oinfo_gradient:
        row += [measures.oinfo_gradient(s, i, ridge=ridge) for i in range(s.p)]
    if config.nodal_pi:
        for i in range(s.p):
            rep = connections.pi_report(s, i, ridge=ridge)
            row += [rep.tc, rep.dtc, rep.oinfo, rep.tse]
    if config.structured:
        rep = structured.structured_report(s, config.partition, ridge=ridge)
        row += [rep.sigma_tc, rep.sigma_dtc, rep.sigma_oinfo, rep.sigma_tse]
    if config.group_kappa:
        for k in range(config.partition.K):
            rep = connections.kappa_report(s, config.partition, k, ridge=ridge)
            row += [rep.tc, rep.dtc, rep.oinfo, rep.tse]
    if config.group_sigma_rsi:
        for k in range(config.partition.K):
            row.append(structured.sigma_rsi(s, config.partition, k, ridge=ridge))
    return row


def spectral_measure_sweep(cs: CrossSpectra, config: SweepConfig) -> SweepTable:
    """Evaluate the configured measures at every frequency, in order.

    A bin whose matrix is not positive definite produces a NaN gap row plus a
    warning entry instead of aborting the sweep.
    """
    if config.partition is not None and config.partition.p != cs.p:
        raise PartitionMismatch(
            f"partition covers {config.partition.p} indices, spectra have {cs.p}"
        )
    names = sweep_column_names(cs.p, config)

    def evaluate(item):
        freq, s = item
        try:
            return _sweep_row(s, config), None
        except NotPositiveDefinite as exc:
            return [math.nan] * len(names), f"bin {freq:g} Hz skipped: {exc}"

    results = ordered_map(evaluate, zip(cs.frequencies, cs.matrices))
    table = np.array([row for row, _ in results], dtype=float)
    warnings = [msg for _, msg in results if msg is not None]
    columns = {name: table[:, j].copy() for j, name in enumerate(names)}
    return SweepTable(np.array(cs.frequencies, dtype=float), columns, warnings)
