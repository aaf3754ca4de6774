"""Multivariate autoregressive models: stability, simulation, t-sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidDof,
    UnstableModel,
)
from .rng import generator, standard_normal

STABILITY_MARGIN = 1e-6
DEFAULT_BURN_IN = 1000


@dataclass(frozen=True)
class Sinusoid:
    """Deterministic per-node drive added to the innovation sequence."""

    node: int
    amplitude: float
    freq_hz: float
    phase: float = 0.0


@dataclass(frozen=True)
class ARModel:
    """Stable-by-intent AR model of arbitrary order.

    coeffs holds A(1)..A(order); innovations are N(0, innovation_cov) plus the
    optional sinusoidal drives.
    """

    coeffs: tuple[np.ndarray, ...]
    innovation_cov: np.ndarray = None
    sinusoids: tuple[Sinusoid, ...] = ()
    sampling_rate: float = 1.0

    def __post_init__(self):
        coeffs = tuple(np.array(a, dtype=float) for a in self.coeffs)
        if not coeffs:
            raise DimensionMismatch("AR model needs at least one lag matrix")
        p = coeffs[0].shape[0]
        for a in coeffs:
            if a.shape != (p, p):
                raise DimensionMismatch(
                    f"lag matrices must all be {p}x{p}, got {a.shape}"
                )
            a.setflags(write=False)
        cov = self.innovation_cov
        cov = np.eye(p) if cov is None else np.array(cov, dtype=float)
        if cov.shape != (p, p):
            raise DimensionMismatch(f"innovation covariance must be {p}x{p}")
        if float(np.max(np.abs(cov - cov.T))) > 1e-10 * max(1.0, float(np.max(np.abs(cov)))):
            raise DimensionMismatch("innovation covariance must be symmetric")
        np.linalg.cholesky(cov)  # must be SPD
        cov.setflags(write=False)
        for s in self.sinusoids:
            if not 0 <= s.node < p:
                raise IndexOutOfRange(f"sinusoid node {s.node} outside 0..{p - 1}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "innovation_cov", cov)
        object.__setattr__(self, "sinusoids", tuple(self.sinusoids))

    @property
    def p(self) -> int:
        return self.coeffs[0].shape[0]

    @property
    def order(self) -> int:
        return len(self.coeffs)


@dataclass(frozen=True)
class TimeSeriesEpochs:
    """Simulated epochs: data has shape (epochs, samples, p)."""

    data: np.ndarray
    sampling_rate: float
    seed: int

    def __post_init__(self):
        d = np.asarray(self.data, dtype=float)
        if d.ndim != 3:
            raise DimensionMismatch(f"expected (epochs, samples, p), got {d.shape}")
        if not np.all(np.isfinite(d)):
            raise DimensionMismatch("time series contains non-finite values")
        object.__setattr__(self, "data", d)

    @property
    def epochs(self) -> int:
        return self.data.shape[0]

    @property
    def samples_per_epoch(self) -> int:
        return self.data.shape[1]

    @property
    def p(self) -> int:
        return self.data.shape[2]


@dataclass(frozen=True)
class StabilityResult:
    stable: bool
    spectral_radius: float


def companion_matrix(model: ARModel) -> np.ndarray:
    p, q = model.p, model.order
    n = p * q
    comp = np.zeros((n, n))
    for k, a in enumerate(model.coeffs):
        comp[:p, k * p : (k + 1) * p] = a
    if q > 1:
        comp[p:, : p * (q - 1)] = np.eye(p * (q - 1))
    return comp


def spectral_radius_power(a: np.ndarray, *, max_iter: int = 20000,
                          check_tol: float = 5e-4) -> tuple[float, bool]:
    """Spectral radius via normalized power iteration.

    The per-step growth ratio converges directly for a dominant real
    eigenvalue; for dominant complex pairs the ratio oscillates, so the
    geometric mean of all growth factors is used and convergence is judged by
    comparing the half-budget and full-budget estimates.
    """
    n = a.shape[0]
    x = np.full(n, 1.0 / math.sqrt(n))
    log_sum = 0.0
    prev_g = None
    stable_steps = 0
    est_half = None
    for k in range(1, max_iter + 1):
        y = a @ x
        g = float(np.linalg.norm(y))
        if g == 0.0:
            return 0.0, True
        x = y / g
        log_sum += math.log(g)
        if prev_g is not None and abs(g - prev_g) <= 1e-12 * max(g, 1.0):
            stable_steps += 1
            if stable_steps >= 8:
                return g, True
        else:
            stable_steps = 0
        prev_g = g
        if k == max_iter // 2:
            est_half = math.exp(log_sum / k)
    est = math.exp(log_sum / max_iter)
    converged = est_half is not None and abs(est - est_half) <= check_tol * max(est, 1.0)
    return est, converged


def ar_is_stable(model: ARModel, *, max_iter: int = 20000) -> StabilityResult:
    """Stability check: companion-matrix spectral radius below 1 - margin."""
    radius, converged = spectral_radius_power(companion_matrix(model),
                                              max_iter=max_iter)
    if not converged:
        raise ConvergenceFailure(radius, max_iter)
    return StabilityResult(stable=radius < 1.0 - STABILITY_MARGIN,
                           spectral_radius=radius)


def _epoch_innovations(model: ARModel, steps: int, seed: int) -> np.ndarray:
    rng = generator(seed)
    z = standard_normal(rng, (steps, model.p))
    chol = np.linalg.cholesky(model.innovation_cov)
    innov = z @ chol.T
    if model.sinusoids:
        t = np.arange(steps, dtype=float)
        for s in model.sinusoids:
            omega = 2.0 * math.pi * s.freq_hz / model.sampling_rate
            innov[:, s.node] += s.amplitude * np.sin(omega * t + s.phase)
    return innov


def simulate_ar(model: ARModel, epochs: int, samples: int, seed: int, *,
                burn_in: int = DEFAULT_BURN_IN) -> TimeSeriesEpochs:
    """Simulate epochs of the AR recursion, burn-in discarded per epoch.

    Epoch e draws innovations from stream seed + e, so the output is
    reproducible and independent of any parallel scheduling. All epochs are
    advanced jointly (the recursion vectorizes across epochs).
    """
    if epochs < 1 or samples < 1:
        raise DimensionMismatch("epochs and samples must both be >= 1")
    result = ar_is_stable(model)
    if not result.stable:
        raise UnstableModel(result.spectral_radius)
    p, q = model.p, model.order
    steps = burn_in + samples
    innov = np.stack(
        [_epoch_innovations(model, steps, seed + e) for e in range(epochs)]
    )  # (epochs, steps, p)
    x = np.zeros((epochs, q + steps, p))
    for t in range(q, q + steps):
        acc = innov[:, t - q, :]
        for k, a in enumerate(model.coeffs, start=1):
            acc = acc + x[:, t - k, :] @ a.T
        x[:, t, :] = acc
    return TimeSeriesEpochs(x[:, q + burn_in :, :], model.sampling_rate, seed)


def sample_multivariate_t(s, dof: float, n: int, seed: int) -> np.ndarray:
    """Multivariate-t draws via the Gaussian / chi-square mixture.

    `s` is the SPD scatter matrix (HermitianMatrix or real array); returns an
    (n, p) real sample with population scatter s * dof / (dof - 2).
    """
    values = s.values.real if hasattr(s, "values") else np.asarray(s, dtype=float)
    if not dof > 2.0:
        raise InvalidDof(f"dof must exceed 2, got {dof}")
    chol = np.linalg.cholesky(values)
    rng = generator(seed)
    z = standard_normal(rng, (n, values.shape[0])) @ chol.T
    g = rng.chisquare(dof, size=n)
    return z / np.sqrt(g / dof)[:, None]
