import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hoicov.errors import (
    IndexOutOfRange,
    IndexOverlap,
    NonPositiveDiagonal,
    NotHermitian,
    NotPositiveDefinite,
    PartitionMismatch,
)
from hoicov.linalg import (
    FieldKind,
    HermitianMatrix,
    blockdiag_part,
    cholesky,
    delete_group,
    delete_index,
    diag_part,
    invert,
    log_det,
    schur_complement,
    standardize,
    submatrix,
)
from hoicov.partition import Partition

from conftest import pd_corpus


def equicorrelation(p, r):
    return HermitianMatrix.from_real(np.eye(p) * (1 - r) + np.full((p, p), r))


class TestConstruction:
    def test_symmetrizes_small_asymmetry(self):
        a = np.array([[1.0, 0.5 + 1e-10], [0.5, 1.0]])
        h = HermitianMatrix.from_real(a)
        assert h.values[0, 1] == h.values[1, 0]

    def test_rejects_large_asymmetry(self):
        a = np.array([[1.0, 0.501], [0.5, 1.0]])
        with pytest.raises(NotHermitian):
            HermitianMatrix.from_real(a)

    def test_rejects_nonpositive_diagonal(self):
        with pytest.raises(NonPositiveDiagonal):
            HermitianMatrix.from_real([[0.0, 0.0], [0.0, 1.0]])

    def test_real_kind_has_zero_imag(self):
        h = HermitianMatrix.from_real([[2.0, 0.3], [0.3, 1.0]])
        assert np.all(h.values.imag == 0.0)
        assert h.kind is FieldKind.REAL

    def test_complex_construction(self):
        v = np.array([[2.0, 1 - 1j], [1 + 1j, 3.0]])
        h = HermitianMatrix.from_complex(v)
        assert h.p == 2
        assert h.values[1, 0] == np.conj(h.values[0, 1])


class TestCholesky:
    def test_identity(self):
        L = cholesky(HermitianMatrix.identity(3)).matrix
        assert np.array_equal(L, np.eye(3))

    def test_hand_2x2(self):
        h = HermitianMatrix.from_real([[4.0, 2.0], [2.0, 5.0]])
        L = cholesky(h).matrix
        assert np.allclose(L, [[2, 0], [1, 2]], atol=1e-14)

    def test_not_pd_reports_pivot(self):
        h = HermitianMatrix.from_real([[1.0, 2.0], [2.0, 1.0]])
        with pytest.raises(NotPositiveDefinite) as info:
            cholesky(h)
        assert info.value.pivot_index == 1
        assert info.value.pivot_value < 0

    def test_ridge_repair(self):
        h = HermitianMatrix.from_real([[1.0, 1.0], [1.0, 1.0]])
        with pytest.raises(NotPositiveDefinite):
            cholesky(h)
        L = cholesky(h, ridge=1e-6)
        assert L.log_det < 0  # tiny but finite determinant

    def test_reconstruction_corpus(self):
        for h in pd_corpus(500, seed=11, p_range=(2, 12)):
            rec = cholesky(h).reconstruct()
            scale = np.max(np.abs(h.values))
            assert np.max(np.abs(rec.values - h.values)) <= 1e-10 * scale


class TestLogDet:
    def test_identity(self):
        assert log_det(HermitianMatrix.identity(5)) == 0.0

    def test_diagonal(self):
        h = HermitianMatrix.from_real(np.diag([2.0, 3.0]))
        assert log_det(h) == pytest.approx(math.log(6.0), abs=1e-12)

    def test_equicorrelation_closed_form(self):
        # det = (1 - r)^(p-1) (1 + (p-1) r)
        h = equicorrelation(3, 0.5)
        assert log_det(h) == pytest.approx(math.log(0.5), abs=1e-12)

    def test_standardize_shifts_by_diag(self):
        for h in pd_corpus(60, seed=3):
            lhs = log_det(standardize(h))
            rhs = log_det(h) - log_det(diag_part(h))
            assert lhs == pytest.approx(rhs, abs=1e-9)


class TestInvert:
    def test_identity(self):
        h = HermitianMatrix.identity(4)
        assert np.array_equal(invert(h).values, np.eye(4))

    def test_hand_3x3(self, collider):
        expected = [[2, 1, -1], [1, 2, -1], [-1, -1, 1]]
        assert np.allclose(invert(collider).values.real, expected, atol=1e-12)

    def test_diagonal(self):
        h = HermitianMatrix.from_real(np.diag([2.0, 4.0]))
        assert np.allclose(invert(h).values.real, np.diag([0.5, 0.25]))

    def test_inverse_identity_corpus(self):
        for h in pd_corpus(500, seed=12, p_range=(2, 12)):
            prod = h.values @ invert(h).values
            assert np.max(np.abs(prod - np.eye(h.p))) <= 1e-8

    def test_real_kind_closed(self):
        for h in pd_corpus(40, seed=5, p_range=(3, 10)):
            if h.kind is not FieldKind.REAL:
                continue
            outputs = [
                invert(h),
                standardize(h),
                diag_part(h),
                blockdiag_part(h, Partition(((0, 1), tuple(range(2, h.p))), h.p)),
                schur_complement(h, tuple(range(h.p - 1)), (h.p - 1,)),
                delete_index(h, 0),
                cholesky(h).reconstruct(),
            ]
            for out in outputs:
                assert out.kind is FieldKind.REAL
                assert np.all(out.values.imag == 0.0)


class TestStandardize:
    def test_diagonal_becomes_identity(self):
        h = HermitianMatrix.from_real(np.diag([2.0, 7.0, 3.0]))
        assert np.array_equal(standardize(h).values, np.eye(3))

    def test_entrywise(self):
        h = HermitianMatrix.from_real([[4.0, 2.0], [2.0, 4.0]])
        assert np.allclose(standardize(h).values.real, [[1, 0.5], [0.5, 1]])

    def test_idempotent_bitwise(self):
        for h in pd_corpus(40, seed=7):
            once = standardize(h)
            twice = standardize(once)
            assert np.array_equal(once.values, twice.values)


class TestParts:
    def test_blockdiag_singletons_is_diag(self):
        for h in pd_corpus(20, seed=9):
            a = diag_part(h).values
            b = blockdiag_part(h, Partition.singletons(h.p)).values
            assert np.array_equal(a, b)

    def test_blockdiag_one_group_identity_map(self):
        h = pd_corpus(1, seed=2, p_range=(4, 4))[0]
        part = Partition(((0, 1, 2, 3),), 4)
        assert np.array_equal(blockdiag_part(h, part).values, h.values)

    def test_blockdiag_zero_pattern(self):
        h = pd_corpus(1, seed=2, p_range=(4, 4))[0]
        part = Partition(((0, 1), (2, 3)), 4)
        out = blockdiag_part(h, part).values
        for i, j in [(0, 2), (0, 3), (1, 2), (1, 3)]:
            assert out[i, j] == 0.0 and out[j, i] == 0.0

    def test_partition_must_cover(self):
        h = HermitianMatrix.identity(4)
        with pytest.raises(PartitionMismatch):
            blockdiag_part(h, Partition(((0, 1), (2,)), 3))


class TestSchurComplement:
    def test_empty_given(self, collider):
        out = schur_complement(collider, (0, 1), ())
        assert np.array_equal(out.values, collider.values[:2, :2])

    def test_collider_hand_value(self, collider):
        out = schur_complement(collider, (0, 1), (2,))
        expected = [[2 / 3, -1 / 3], [-1 / 3, 2 / 3]]
        assert np.allclose(out.values.real, expected, atol=1e-14)

    def test_blockdiag_independence(self):
        v = np.zeros((4, 4))
        v[:2, :2] = [[2.0, 0.5], [0.5, 1.0]]
        v[2:, 2:] = [[3.0, 1.0], [1.0, 2.0]]
        h = HermitianMatrix.from_real(v)
        out = schur_complement(h, (0, 1), (2, 3))
        assert np.allclose(out.values, v[:2, :2], atol=1e-14)

    def test_overlap_rejected(self, collider):
        with pytest.raises(IndexOverlap):
            schur_complement(collider, (0, 1), (1,))

    def test_logdet_multiplicativity(self):
        # ln det H = ln det H_gg + ln det (H / H_gg) on random splits
        rng = np.random.Generator(np.random.PCG64(21))
        for h in pd_corpus(100, seed=13, p_range=(3, 10)):
            cut = int(rng.integers(1, h.p))
            keep = tuple(range(cut))
            given = tuple(range(cut, h.p))
            lhs = log_det(h)
            rhs = log_det(submatrix(h, given)) + log_det(
                schur_complement(h, keep, given)
            )
            assert lhs == pytest.approx(rhs, abs=1e-9)


class TestDelete:
    def test_delete_from_identity(self):
        out = delete_index(HermitianMatrix.identity(3), 1)
        assert np.array_equal(out.values, np.eye(2))

    def test_delete_node(self, collider):
        out = delete_index(collider, 2)
        assert np.allclose(out.values.real, [[1, 0], [0, 1]])
        out = delete_index(collider, 0)
        assert np.allclose(out.values.real, [[1, 1], [1, 3]])

    def test_delete_group_singleton_matches_delete_index(self, collider):
        part = Partition.singletons(3)
        a = delete_group(collider, part, 2)
        b = delete_index(collider, 2)
        assert np.array_equal(a.values, b.values)

    def test_out_of_range(self, collider):
        with pytest.raises(IndexOutOfRange):
            delete_index(collider, 3)


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=10**6))
def test_cholesky_reconstruction_property(p, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    g = rng.standard_normal((p, p)) + 1j * rng.standard_normal((p, p))
    h = HermitianMatrix.from_complex(g @ g.conj().T + 0.1 * np.eye(p))
    rec = cholesky(h).reconstruct()
    assert np.max(np.abs(rec.values - h.values)) <= 1e-10 * np.max(np.abs(h.values))


@given(st.integers(min_value=2, max_value=8), st.integers(min_value=0, max_value=10**6))
def test_schur_keeps_pd_property(p, seed):
    rng = np.random.Generator(np.random.PCG64(seed))
    g = rng.standard_normal((p, p))
    h = HermitianMatrix.from_real(g @ g.T + 0.1 * np.eye(p))
    keep = tuple(range(p - 1))
    out = schur_complement(h, keep, (p - 1,))
    cholesky(out)  # must not raise
