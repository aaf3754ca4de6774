import math

import numpy as np
import pytest

from hoicov.ar import (
    ARModel,
    Sinusoid,
    ar_is_stable,
    companion_matrix,
    sample_multivariate_t,
    simulate_ar,
)
from hoicov.errors import DimensionMismatch, InvalidDof, UnstableModel
from hoicov.linalg import HermitianMatrix


def univariate(*lags, sinusoids=(), fs=1.0):
    return ARModel(coeffs=tuple(np.array([[a]]) for a in lags),
                   sinusoids=sinusoids, sampling_rate=fs)


class TestStability:
    def test_scalar_half(self):
        res = ar_is_stable(univariate(0.5))
        assert res.stable
        assert res.spectral_radius == pytest.approx(0.5, abs=1e-9)

    def test_unit_root_unstable(self):
        res = ar_is_stable(univariate(1.0))
        assert not res.stable
        assert res.spectral_radius == pytest.approx(1.0, abs=1e-9)

    def test_complex_pair_radius(self):
        # roots of z^2 - 1.6 z + 0.9: conjugate pair with modulus sqrt(0.9)
        res = ar_is_stable(univariate(1.6, -0.9))
        assert res.stable
        assert res.spectral_radius == pytest.approx(math.sqrt(0.9), abs=1e-3)

    def test_companion_shape(self):
        model = ARModel(coeffs=(np.eye(3) * 0.1, np.eye(3) * 0.05))
        assert companion_matrix(model).shape == (6, 6)

    def test_zero_model_radius_zero(self):
        res = ar_is_stable(ARModel(coeffs=(np.zeros((2, 2)),)))
        assert res.stable
        assert res.spectral_radius == 0.0


class TestSimulate:
    def test_white_noise_covariance(self):
        model = ARModel(coeffs=(np.zeros((3, 3)),))
        ts = simulate_ar(model, epochs=200, samples=256, seed=0, burn_in=10)
        pooled = ts.data.reshape(-1, 3)
        cov = pooled.T @ pooled / pooled.shape[0]
        assert np.max(np.abs(cov - np.eye(3))) <= 0.05

    def test_ar1_stationary_variance(self):
        # var = 1 / (1 - a^2) for a univariate AR(1)
        ts = simulate_ar(univariate(0.9), epochs=60, samples=512, seed=1)
        var = float(np.var(ts.data))
        assert var == pytest.approx(1.0 / (1.0 - 0.81), rel=0.10)

    def test_same_seed_bitwise_identical(self):
        model = univariate(0.5)
        a = simulate_ar(model, epochs=3, samples=64, seed=7)
        b = simulate_ar(model, epochs=3, samples=64, seed=7)
        assert np.array_equal(a.data, b.data)

    def test_different_seeds_differ(self):
        model = univariate(0.5)
        a = simulate_ar(model, epochs=1, samples=64, seed=7)
        b = simulate_ar(model, epochs=1, samples=64, seed=8)
        assert not np.array_equal(a.data, b.data)

    def test_unstable_model_rejected(self):
        with pytest.raises(UnstableModel):
            simulate_ar(univariate(1.01), epochs=1, samples=16, seed=0)

    def test_sinusoid_drive_appears(self):
        model = univariate(0.0, sinusoids=(Sinusoid(0, 10.0, 0.25),), fs=1.0)
        ts = simulate_ar(model, epochs=1, samples=256, seed=0, burn_in=0)
        spectrum = np.abs(np.fft.rfft(ts.data[0, :, 0]))
        assert int(np.argmax(spectrum[1:])) + 1 == 64  # bin of 0.25 cycles/sample

    def test_epoch_streams_are_independent_of_epoch_count(self):
        model = univariate(0.5)
        a = simulate_ar(model, epochs=2, samples=64, seed=3)
        b = simulate_ar(model, epochs=4, samples=64, seed=3)
        assert np.array_equal(a.data, b.data[:2])

    def test_validation(self):
        with pytest.raises(DimensionMismatch):
            ARModel(coeffs=())
        with pytest.raises(DimensionMismatch):
            ARModel(coeffs=(np.zeros((2, 3)),))
        with pytest.raises(DimensionMismatch):
            simulate_ar(univariate(0.5), epochs=0, samples=16, seed=0)


class TestMultivariateT:
    def test_gaussian_limit(self):
        s = HermitianMatrix.from_real([[2.0, 0.8], [0.8, 1.0]])
        x = sample_multivariate_t(s, dof=1e6, n=50000, seed=0)
        cov = x.T @ x / x.shape[0]
        assert np.max(np.abs(cov - s.values.real)) <= 0.05 * np.max(s.values.real)

    def test_dof5_second_moment(self):
        s = HermitianMatrix.from_real([[2.0, 0.8], [0.8, 1.0]])
        x = sample_multivariate_t(s, dof=5.0, n=50000, seed=1)
        cov = x.T @ x / x.shape[0]
        expected = (5.0 / 3.0) * s.values.real
        assert np.max(np.abs(cov - expected)) <= 0.10 * np.max(expected)

    def test_seed_determinism(self):
        s = HermitianMatrix.identity(3)
        a = sample_multivariate_t(s, dof=5.0, n=100, seed=9)
        b = sample_multivariate_t(s, dof=5.0, n=100, seed=9)
        assert np.array_equal(a, b)

    def test_invalid_dof(self):
        with pytest.raises(InvalidDof):
            sample_multivariate_t(HermitianMatrix.identity(2), dof=2.0, n=10, seed=0)
