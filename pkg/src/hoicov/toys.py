"""Reference AR configurations for the two bundled toy experiments.

Toy 1: six nodes, AR(2). Nodes 0-2 form a redundancy triad (one oscillator
driving two followers) tuned to 28 Hz; nodes 3-5 form an independent synergy
triad (two oscillators summed into a collider) tuned to 16 Hz.

Toy 2: twelve nodes in four groups of three, AR(1). Each group is a driver
plus two followers (within-group redundancy); the fourth group's driver sums
the other three drivers (between-group collider synergy). The three parent
drivers carry sinusoidal innovation drives at distinct frequencies.

All acceptance checks are qualitative (signs in bands / at bins); the exact
coefficients are implementation choices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ar import ARModel, Sinusoid, TimeSeriesEpochs, simulate_ar
from .partition import Partition
from .spectra import (
    CrossSpectra,
    SweepConfig,
    SweepTable,
    periodogram_cross_spectra,
    spectral_measure_sweep,
)

SAMPLING_RATE = 256.0
DEFAULT_EPOCHS = 100
DEFAULT_SAMPLES = 256

TOY1_SYNERGY_BAND = (14.0, 18.0)
TOY1_REDUNDANCY_BAND = (26.0, 30.0)
TOY1_REDUNDANCY_PEAK_HZ = 28.0
TOY1_SYNERGY_PEAK_HZ = 16.0
TOY2_DRIVEN_HZ = (20.0, 24.0, 28.0)


def _oscillator(freq_hz: float, fs: float, radius: float) -> tuple[float, float]:
    """AR(2) lag coefficients for a complex pole pair at the given frequency."""
    theta = 2.0 * math.pi * freq_hz / fs
    return 2.0 * radius * math.cos(theta), -radius * radius


def toy1_model(fs: float = SAMPLING_RATE) -> ARModel:
    # Pole radius and coupling strengths keep the coherent band narrow enough
    # for a 400-epoch periodogram to track the population TC bin by bin while
    # leaving wide sign margins for the band/peak checks.
    p = 6
    radius = 0.92
    follow = 0.18
    collide = 0.2
    a1 = np.zeros((p, p))
    a2 = np.zeros((p, p))
    # redundancy triad: node 0 oscillates at 28 Hz, nodes 1 and 2 follow it
    c1, c2 = _oscillator(TOY1_REDUNDANCY_PEAK_HZ, fs, radius)
    a1[0, 0], a2[0, 0] = c1, c2
    a1[1, 0] = follow
    a1[2, 0] = follow
    # synergy triad: nodes 3 and 4 oscillate at 16 Hz, node 5 sums them
    c1, c2 = _oscillator(TOY1_SYNERGY_PEAK_HZ, fs, radius)
    a1[3, 3], a2[3, 3] = c1, c2
    a1[4, 4], a2[4, 4] = c1, c2
    a1[5, 3] = collide
    a1[5, 4] = collide
    return ARModel(coeffs=(a1, a2), sampling_rate=fs)


def toy2_model(fs: float = SAMPLING_RATE) -> tuple[ARModel, Partition]:
    p = 12
    self_decay = 0.2
    follow = 0.8
    collide = 0.75
    drive_amp = 1.2
    a1 = np.eye(p) * self_decay
    drivers = (0, 3, 6, 9)
    for d in drivers:
        a1[d + 1, d] = follow
        a1[d + 2, d] = follow
    # group 3's driver is a collider summing the three parent drivers
    for d in drivers[:3]:
        a1[9, d] = collide
    sinusoids = tuple(
        Sinusoid(node=d, amplitude=drive_amp, freq_hz=f)
        for d, f in zip(drivers[:3], TOY2_DRIVEN_HZ)
    )
    part = Partition(tuple((d, d + 1, d + 2) for d in drivers), p)
    return ARModel(coeffs=(a1,), sinusoids=sinusoids, sampling_rate=fs), part


@dataclass(frozen=True)
class ToyCheck:
    name: str
    passed: bool
    detail: str


@dataclass
class ToyRunResult:
    which: int
    seed: int
    timeseries: TimeSeriesEpochs
    spectra: CrossSpectra
    sweep: SweepTable
    checks: list[ToyCheck]
    partition: Partition | None = None

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def toy1_checks(table: SweepTable) -> list[ToyCheck]:
    lo_band = table.band_values("oinfo", *TOY1_SYNERGY_BAND)
    hi_band = table.band_values("oinfo", *TOY1_REDUNDANCY_BAND)
    checks = [
        ToyCheck(
            "oinfo_negative_in_14_18_hz",
            bool(np.min(lo_band) < 0.0),
            f"min O-information in band = {np.min(lo_band):.4f}",
        ),
        ToyCheck(
            "oinfo_positive_in_26_30_hz",
            bool(np.max(hi_band) > 0.0),
            f"max O-information in band = {np.max(hi_band):.4f}",
        ),
    ]
    red = [table.value_at(f"lambda_rsi_{i}", TOY1_REDUNDANCY_PEAK_HZ)
           for i in range(3)]
    syn = [table.value_at(f"lambda_rsi_{i}", TOY1_SYNERGY_PEAK_HZ)
           for i in range(3, 6)]
    checks.append(ToyCheck(
        "nodes_1_3_positive_lambda_rsi_at_28_hz",
        all(v > 0.0 for v in red),
        "values " + ", ".join(f"{v:.4f}" for v in red),
    ))
    checks.append(ToyCheck(
        "nodes_4_6_negative_lambda_rsi_at_16_hz",
        all(v < 0.0 for v in syn),
        "values " + ", ".join(f"{v:.4f}" for v in syn),
    ))
    return checks


def toy2_checks(table: SweepTable, part: Partition) -> list[ToyCheck]:
    checks = []
    oinfo = [table.value_at("oinfo", f) for f in TOY2_DRIVEN_HZ]
    sigma = [table.value_at("sigma_oinfo", f) for f in TOY2_DRIVEN_HZ]
    checks.append(ToyCheck(
        "global_oinfo_positive_at_driven_bins",
        all(v > 0.0 for v in oinfo),
        "values " + ", ".join(f"{v:.4f}" for v in oinfo),
    ))
    checks.append(ToyCheck(
        "sigma_oinfo_negative_at_driven_bins",
        all(v < 0.0 for v in sigma),
        "values " + ", ".join(f"{v:.4f}" for v in sigma),
    ))
    kappa = [table.value_at(f"kappa_oinfo_g{k}", f)
             for k in range(part.K) for f in TOY2_DRIVEN_HZ]
    checks.append(ToyCheck(
        "kappa_oinfo_negative_all_groups_at_driven_bins",
        all(v < 0.0 for v in kappa),
        f"max over groups/bins = {max(kappa):.4f}",
    ))
    srsi = [table.value_at(f"sigma_rsi_g{k}", f)
            for k in range(part.K) for f in TOY2_DRIVEN_HZ]
    checks.append(ToyCheck(
        "sigma_rsi_negative_all_groups_at_driven_bins",
        all(v < 0.0 for v in srsi),
        f"max over groups/bins = {max(srsi):.4f}",
    ))
    return checks


def run_toy(which: int, seed: int, epochs: int = DEFAULT_EPOCHS,
            samples: int = DEFAULT_SAMPLES) -> ToyRunResult:
    """Simulate, estimate cross-spectra, sweep measures, run the sign checks."""
    if which == 1:
        model = toy1_model()
        part = None
        config = SweepConfig(nodal_lambda_rsi=True, nodal_oinfo_gradient=True,
                             nodal_pi=True)
    elif which == 2:
        model, part = toy2_model()
        config = SweepConfig(partition=part, structured=True, group_kappa=True,
                             group_sigma_rsi=True)
    else:
        raise ValueError(f"unknown toy experiment {which}")
    ts = simulate_ar(model, epochs, samples, seed)
    cs = periodogram_cross_spectra(ts)
    table = spectral_measure_sweep(cs, config)
    checks = toy1_checks(table) if which == 1 else toy2_checks(table, part)
    return ToyRunResult(which=which, seed=seed, timeseries=ts, spectra=cs,
                        sweep=table, checks=checks, partition=part)
