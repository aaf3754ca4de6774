import math

import numpy as np
import pytest

from hoicov.connections import (
    disconnected_covariance,
    kappa_dtc,
    kappa_dtc_definitional,
    kappa_oinfo,
    kappa_report,
    kappa_tc,
    kappa_tc_definitional,
    kappa_tse,
    pi_dtc,
    pi_dtc_definitional,
    pi_oinfo,
    pi_report,
    pi_tc,
    pi_tc_definitional,
    pi_tse,
)
from hoicov.linalg import HermitianMatrix
from hoicov.partition import Partition

from conftest import pd_corpus
from test_structured import random_partition


def isolated_node_matrix():
    v = np.zeros((3, 3))
    v[:2, :2] = [[1.0, 0.6], [0.6, 1.0]]
    v[2, 2] = 1.0
    return HermitianMatrix.from_real(v)


class TestPiMeasures:
    def test_isolated_node_zero(self):
        h = isolated_node_matrix()
        assert pi_tc(h, 2) == pytest.approx(0.0, abs=1e-12)
        assert pi_dtc(h, 2) == pytest.approx(0.0, abs=1e-12)
        assert pi_oinfo(h, 2) == pytest.approx(0.0, abs=1e-12)
        assert pi_tse(h, 2) == pytest.approx(0.0, abs=1e-12)

    def test_identity_zero(self):
        h = HermitianMatrix.identity(5)
        for i in range(5):
            assert pi_tc(h, i) == pytest.approx(0.0, abs=1e-14)
            assert pi_dtc(h, i) == pytest.approx(0.0, abs=1e-14)

    def test_collider_values(self, collider):
        assert pi_tc(collider, 2) == pytest.approx(0.5 * math.log(9 / 4), abs=1e-12)
        assert pi_dtc(collider, 2) == pytest.approx(0.5 * math.log(4), abs=1e-12)
        assert pi_oinfo(collider, 2) == pytest.approx(
            0.5 * math.log(9 / 4) - 0.5 * math.log(4), abs=1e-12
        )
        assert pi_oinfo(collider, 2) == pytest.approx(-0.287682, abs=1e-6)

    def test_tse_dominates_oinfo(self):
        for h in pd_corpus(100, seed=61, p_range=(3, 10)):
            for i in (0, h.p - 1):
                assert pi_tse(h, i) >= abs(pi_oinfo(h, i)) - 1e-12

    def test_nonnegative_corpus(self):
        rng = np.random.Generator(np.random.PCG64(1))
        for h in pd_corpus(300, seed=62, p_range=(3, 12)):
            i = int(rng.integers(h.p))
            assert pi_tc(h, i) >= -1e-9
            assert pi_dtc(h, i) >= -1e-9

    def test_definitional_agreement(self):
        rng = np.random.Generator(np.random.PCG64(2))
        for h in pd_corpus(150, seed=63, p_range=(3, 10)):
            i = int(rng.integers(h.p))
            assert pi_tc(h, i) == pytest.approx(pi_tc_definitional(h, i), abs=1e-9)
            assert pi_dtc(h, i) == pytest.approx(pi_dtc_definitional(h, i), abs=1e-9)

    def test_scale_invariance(self):
        rng = np.random.Generator(np.random.PCG64(3))
        for h in pd_corpus(60, seed=64, p_range=(3, 9)):
            d = rng.uniform(0.2, 5.0, h.p)
            scaled = HermitianMatrix(d[:, None] * h.values * d[None, :], h.kind)
            i = int(rng.integers(h.p))
            assert pi_tc(scaled, i) == pytest.approx(pi_tc(h, i), abs=1e-10)
            assert pi_dtc(scaled, i) == pytest.approx(pi_dtc(h, i), abs=1e-10)

    def test_disconnected_covariance_blocks(self, collider):
        disc = disconnected_covariance(collider, 2)
        # cross block exactly zero, conditional variances on the blocks
        assert disc.values[0, 2] == 0.0 and disc.values[1, 2] == 0.0
        assert disc.values[2, 2].real == pytest.approx(1.0, abs=1e-12)  # 3 - 2
        assert np.allclose(
            disc.values[:2, :2].real, [[2 / 3, -1 / 3], [-1 / 3, 2 / 3]], atol=1e-12
        )


class TestKappaMeasures:
    def test_singleton_groups_equal_pi(self):
        rng = np.random.Generator(np.random.PCG64(4))
        for h in pd_corpus(100, seed=65, p_range=(3, 9)):
            part = Partition.singletons(h.p)
            i = int(rng.integers(h.p))
            assert kappa_tc(h, part, i) == pytest.approx(pi_tc(h, i), abs=1e-12)
            assert kappa_dtc(h, part, i) == pytest.approx(pi_dtc(h, i), abs=1e-12)
            assert kappa_oinfo(h, part, i) == pytest.approx(pi_oinfo(h, i), abs=1e-12)
            assert kappa_tse(h, part, i) == pytest.approx(pi_tse(h, i), abs=1e-12)

    def test_collider_singletons(self, collider):
        part = Partition.singletons(3)
        assert kappa_oinfo(collider, part, 2) == pytest.approx(-0.287682, abs=1e-6)

    def test_independent_group_zero(self):
        v = np.zeros((4, 4))
        v[:2, :2] = [[1.0, 0.4], [0.4, 1.0]]
        v[2:, 2:] = [[1.0, 0.7], [0.7, 2.0]]
        h = HermitianMatrix.from_real(v)
        part = Partition(((0, 1), (2, 3)), 4)
        for k in range(2):
            assert kappa_tc(h, part, k) == pytest.approx(0.0, abs=1e-12)
            assert kappa_dtc(h, part, k) == pytest.approx(0.0, abs=1e-12)
            assert kappa_oinfo(h, part, k) == pytest.approx(0.0, abs=1e-12)
            assert kappa_tse(h, part, k) == pytest.approx(0.0, abs=1e-12)

    def test_nonnegative_corpus(self):
        rng = np.random.Generator(np.random.PCG64(5))
        for h in pd_corpus(300, seed=66, p_range=(3, 12)):
            part = random_partition(h.p, rng, min_groups=2)
            k = int(rng.integers(part.K))
            assert kappa_tc(h, part, k) >= -1e-9
            assert kappa_dtc(h, part, k) >= -1e-9

    def test_definitional_agreement(self):
        rng = np.random.Generator(np.random.PCG64(6))
        for h in pd_corpus(150, seed=67, p_range=(3, 10)):
            part = random_partition(h.p, rng, min_groups=2)
            k = int(rng.integers(part.K))
            assert kappa_tc(h, part, k) == pytest.approx(
                kappa_tc_definitional(h, part, k), abs=1e-9
            )
            assert kappa_dtc(h, part, k) == pytest.approx(
                kappa_dtc_definitional(h, part, k), abs=1e-9
            )


class TestReports:
    def test_pi_report_consistency(self, collider):
        rep = pi_report(collider, 2)
        assert rep.oinfo == rep.tc - rep.dtc
        assert rep.tse == rep.tc + rep.dtc
        assert rep.target == 2

    def test_kappa_report_consistency(self, collider):
        part = Partition(((0,), (1,), (2,)), 3)
        rep = kappa_report(collider, part, 2)
        assert rep.oinfo == rep.tc - rep.dtc
        assert rep.tse == rep.tc + rep.dtc
